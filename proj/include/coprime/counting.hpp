#pragma once

#include "coprime/pair_counts.hpp"
#include "coprime/prime_params.hpp"
#include "coprime/residue.hpp"

namespace coprime {

/// Constant term of the coprime decomposition of 2n by n mod 3:
/// h(0) = 3, h(1) = 1, h(2) = 5 (equivalently 3x^2 - 5x + 3).
i64 selector_h(i64 x);

/// Reduced data of one evaluation: n, its residue mod 3, the reduced index
/// m = (n - h(n mod 3))/3, and its decomposition m = p*omega + r.
///
/// m (and omega) can be negative for small n; r always lands in [0, p-1]
/// through floor semantics.
struct CaseData {
    i64 n;
    i64 n_mod3;
    i64 m;
    i64 r;      // delta_p(m)
    i64 omega;  // floor(m / p)
};

CaseData case_data(i64 n, i64 p);

/// Lift counts for raising a residue pair to integer pairs: total many for
/// an ordered residue pair, half many when the ordering collapses on the
/// diagonal.
struct LiftVector {
    i64 total;
    i64 half;
};

/// (omega+1, floor(omega/2)+1): lifts at sum level r.
constexpr LiftVector eta(i64 omega) noexcept {
    return {omega + 1, floor_div(omega, 2) + 1};
}

/// (omega, floor((omega-1)/2)+1): lifts at sum level p+r.
constexpr LiftVector eta_bar(i64 omega) noexcept {
    return {omega, floor_div(omega - 1, 2) + 1};
}

/// Count for n = 1 or 2 (mod 3): both summands share the residue class
/// 1 resp. 5 mod 6, so one residue is excluded per coordinate and the
/// diagonal needs the halved lift count.
i64 q_same(const CaseData& cd, const PrimeParams& params);

/// Count for n = 0 (mod 3): summands come one from each class, giving
/// ordered residue pairs with distinct exclusions and no diagonal case.
i64 q_mixed(const CaseData& cd, const PrimeParams& params);

/// Number of ways to write the positive even integer two_n as h + k with
/// h <= k and gcd(h, 6p) = gcd(k, 6p) = 1; constant work per call given
/// precomputed params.
i64 g_closed(i64 two_n, const PrimeParams& params);

/// Convenience overload recomputing params on each call.
i64 g_closed(i64 two_n, i64 p);

}  // namespace coprime
