#include "coprime/oracle.hpp"

#include <stdexcept>

#include "coprime/prime_params.hpp"

namespace coprime {

i64 g_oracle(i64 two_n, i64 p) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("g_oracle: two_n must be a positive even integer");
    if (p > kMaxPrime)
        throw std::range_error("g_oracle: p too large");
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("g_oracle: p must be a prime >= 5");

    const i64 six_p = 6 * p;
    const i64 n = two_n / 2;
    i64 total = 0;
    for (i64 h = 1; h <= n; ++h) {
        const i64 k = two_n - h;
        if (gcd_i64(h, six_p) == 1 && gcd_i64(k, six_p) == 1) ++total;
    }
    return total;
}

}  // namespace coprime
