#pragma once

#include "coprime/residue.hpp"

namespace coprime {

// Largest accepted prime; keeps 6*p and 5*p inside int64.
inline constexpr i64 kMaxPrime = 1'000'000'000'000'000;

/// Deterministic trial-division primality test; false for n < 2.
bool is_prime(i64 n) noexcept;

/// Excluded-residue parameters of a prime p >= 5.
///
/// a_p is the least x in [0, p-1] with p | 6x+1 and b_p the least with
/// p | 6x+5: the residue classes of z that must be removed when counting
/// integers 6z+1 resp. 6z+5 coprime to p. Always a_p + b_p + 1 = p.
struct PrimeParams {
    i64 p;
    i64 delta6;  // p mod 6, always 1 or 5 for prime p >= 5
    i64 M;       // selector (5 - delta6) / 4, so 1 or 0
    i64 a_p;
    i64 b_p;
};

/// Closed-form parameters: a_p = (p-1)/6 when p = 1 (mod 6) and (5p-1)/6
/// when p = 5 (mod 6); b_p = p - 1 - a_p. Rejects p < 5, composites, and
/// p > kMaxPrime.
PrimeParams compute_params(i64 p);

/// The excluded residue for the matching-residue cases: a_p when
/// n_mod3 == 1, b_p when n_mod3 == 2. Other selectors are rejected.
i64 f_selector(const PrimeParams& params, i64 n_mod3);

}  // namespace coprime
