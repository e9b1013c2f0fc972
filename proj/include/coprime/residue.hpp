#pragma once

#include <cstdint>
#include <stdexcept>

namespace coprime {

using i64 = std::int64_t;

// Floor division, rounding toward -inf. Requires b > 0.
constexpr i64 floor_div(i64 a, i64 b) noexcept {
    i64 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Canonical remainder in [0, b-1] for any a. Requires b > 0.
constexpr i64 floor_mod(i64 a, i64 b) noexcept {
    i64 r = a % b;
    return r < 0 ? r + b : r;
}

// Iterative Euclidean gcd, always nonnegative; gcd(0, 0) = 0.
constexpr i64 gcd_i64(i64 a, i64 b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// A validated modulus k >= 2.
class Modulus {
public:
    explicit Modulus(i64 k) : k_(k) {
        if (k < 2) throw std::invalid_argument("Modulus: k must be >= 2");
    }
    i64 value() const noexcept { return k_; }

private:
    i64 k_;
};

/// Canonical remainder of a modulo k: a - k*floor(a/k), always in [0, k-1].
/// Floor semantics, so negative inputs map to the nonnegative representative.
inline i64 delta(Modulus k, i64 a) noexcept { return floor_mod(a, k.value()); }

/// k - delta(k, a). Defined only for delta(k, a) != 0; equals delta(k, -a).
inline i64 delta_neg(Modulus k, i64 a) {
    const i64 d = delta(k, a);
    if (d == 0) throw std::invalid_argument("delta_neg: requires delta(k, a) != 0");
    return k.value() - d;
}

}  // namespace coprime
