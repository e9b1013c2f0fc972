#pragma once

#include "coprime/residue.hpp"

namespace coprime {

/// Brute-force reference count: iterates h = 1..n with k = two_n - h and
/// counts gcd(h, 6p) = gcd(k, 6p) = 1. Linear in n; ground truth for every
/// closed-form value.
i64 g_oracle(i64 two_n, i64 p);

}  // namespace coprime
