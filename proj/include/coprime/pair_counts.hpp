#pragma once

#include <stdexcept>

#include "coprime/residue.hpp"

namespace coprime {

/// Step function: 1 for x >= 0, else 0.
constexpr i64 step_H(i64 x) noexcept { return x >= 0 ? 1 : 0; }

/// Point indicator: 1 for x == 0, else 0.
constexpr i64 ind_zero(i64 x) noexcept { return x == 0 ? 1 : 0; }

/// 1 when r is even and r = 2a, i.e. the level-r diagonal slot (r/2, r/2)
/// coincides with the excluded value a. Total on all integers (floor
/// semantics make delta_2 an even-indicator for negatives too).
constexpr i64 tau(i64 r, i64 a) noexcept {
    return (1 - floor_mod(r, 2)) * ind_zero(2 * a - r);
}

/// Pairs (s,t) with s+t = r, s <= t, both in {0..p-1}\{a}:
/// floor(r/2) + 1 - H(r-a).
inline i64 kappa(i64 r, i64 a) {
    if (r < 0 || a < 0) throw std::invalid_argument("kappa: requires r, a >= 0");
    return r / 2 + 1 - step_H(r - a);
}

/// Pairs (s,t) with s+t = p+r, s <= t, both in {0..p-1}\{a}:
/// floor((p-r)/2) - H(a-r-1).
inline i64 kappa_bar(i64 r, i64 a, i64 p) {
    if (p < 2) throw std::invalid_argument("kappa_bar: requires p >= 2");
    if (r < 0 || r >= p || a < 0 || a >= p)
        throw std::invalid_argument("kappa_bar: requires 0 <= r, a <= p-1");
    return (p - r) / 2 - step_H(a - r - 1);
}

/// A pair count split into strictly ordered pairs s < t and the diagonal
/// pair s = t (0 or 1).
struct CountVector {
    i64 strict;
    i64 diagonal;
};

// The diagonal pair is present exactly when the sum level is even and its
// midpoint is not the excluded value: (1 - delta_2(r)) - tau(r, a).

/// Split of kappa(r, a) into (strict, diagonal).
inline CountVector nu(i64 r, i64 a) {
    const i64 diag = (1 - floor_mod(r, 2)) - tau(r, a);
    return {kappa(r, a) - diag, diag};
}

/// Split of kappa_bar(r, a, p) into (strict, diagonal); the level p+r has
/// midpoint (p+r)/2, hence the shifted arguments (p-r, a-r).
inline CountVector nu_bar(i64 r, i64 a, i64 p) {
    const i64 diag = (1 - floor_mod(p - r, 2)) - tau(p - r, a - r);
    return {kappa_bar(r, a, p) - diag, diag};
}

/// Ordered pairs (s,t) with s+t = r, s in {0..p-1}\{a}, t in {0..p-1}\{b}:
/// r + 1 - H(r-a) - H(r-b) + 1(a+b-r).
inline i64 lambda(i64 r, i64 a, i64 b) {
    if (r < 0 || a < 0 || b < 0)
        throw std::invalid_argument("lambda: requires r, a, b >= 0");
    return r + 1 - step_H(r - a) - step_H(r - b) + ind_zero(a + b - r);
}

/// Ordered pairs (s,t) with s+t = p+r, same exclusions:
/// p - r - 1 - H(a-r-1) - H(b-r-1) + 1(a+b-p-r).
inline i64 lambda_bar(i64 r, i64 a, i64 b, i64 p) {
    if (p < 2) throw std::invalid_argument("lambda_bar: requires p >= 2");
    if (r < 0 || r >= p || a < 0 || a >= p || b < 0 || b >= p)
        throw std::invalid_argument("lambda_bar: requires 0 <= r, a, b <= p-1");
    return p - r - 1 - step_H(a - r - 1) - step_H(b - r - 1) + ind_zero(a + b - p - r);
}

}  // namespace coprime
