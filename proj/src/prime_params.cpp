#include "coprime/prime_params.hpp"

#include <stdexcept>
#include <string>

namespace coprime {

bool is_prime(i64 n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeParams compute_params(i64 p) {
    if (p > kMaxPrime)
        throw std::range_error("compute_params: p exceeds " + std::to_string(kMaxPrime));
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("compute_params: p must be a prime >= 5");

    PrimeParams params;
    params.p = p;
    params.delta6 = floor_mod(p, 6);
    params.M = (5 - params.delta6) / 4;
    params.a_p = params.delta6 == 1 ? (p - 1) / 6 : (5 * p - 1) / 6;
    params.b_p = p - 1 - params.a_p;
    return params;
}

i64 f_selector(const PrimeParams& params, i64 n_mod3) {
    if (n_mod3 == 1) return params.a_p;
    if (n_mod3 == 2) return params.b_p;
    throw std::invalid_argument("f_selector: n_mod3 must be 1 or 2");
}

}  // namespace coprime
