#include "coprime/counting.hpp"

#include <stdexcept>

namespace coprime {

i64 selector_h(i64 x) {
    switch (x) {
        case 0: return 3;
        case 1: return 1;
        case 2: return 5;
        default: throw std::invalid_argument("selector_h: x must be in {0, 1, 2}");
    }
}

CaseData case_data(i64 n, i64 p) {
    if (n < 1) throw std::invalid_argument("case_data: n must be positive");
    if (p < 5) throw std::invalid_argument("case_data: p must be >= 5");
    CaseData cd;
    cd.n = n;
    cd.n_mod3 = floor_mod(n, 3);
    const i64 num = n - selector_h(cd.n_mod3);
    if (floor_mod(num, 3) != 0)
        throw std::logic_error("case_data: n - h(n mod 3) not divisible by 3");
    cd.m = num / 3;  // exact, sign-safe
    cd.r = floor_mod(cd.m, p);
    cd.omega = floor_div(cd.m, p);
    return cd;
}

i64 q_same(const CaseData& cd, const PrimeParams& params) {
    if (cd.n_mod3 != 1 && cd.n_mod3 != 2)
        throw std::invalid_argument("q_same: requires n mod 3 in {1, 2}");
    const i64 f = f_selector(params, cd.n_mod3);
    const LiftVector e = eta(cd.omega);
    const LiftVector eb = eta_bar(cd.omega);
    const CountVector v = nu(cd.r, f);
    const CountVector vb = nu_bar(cd.r, f, params.p);
    const i64 q = e.total * v.strict + e.half * v.diagonal +
                  eb.total * vb.strict + eb.half * vb.diagonal;
    if (q < 0) throw std::logic_error("q_same: negative count");
    return q;
}

i64 q_mixed(const CaseData& cd, const PrimeParams& params) {
    if (cd.n_mod3 != 0)
        throw std::invalid_argument("q_mixed: requires n mod 3 = 0");
    const i64 q = (cd.omega + 1) * lambda(cd.r, params.a_p, params.b_p) +
                  cd.omega * lambda_bar(cd.r, params.a_p, params.b_p, params.p);
    if (q < 0) throw std::logic_error("q_mixed: negative count");
    return q;
}

i64 g_closed(i64 two_n, const PrimeParams& params) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("g_closed: two_n must be a positive even integer");
    const CaseData cd = case_data(two_n / 2, params.p);
    return cd.n_mod3 == 0 ? q_mixed(cd, params) : q_same(cd, params);
}

i64 g_closed(i64 two_n, i64 p) { return g_closed(two_n, compute_params(p)); }

}  // namespace coprime
