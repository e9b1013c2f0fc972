#include "coprime/linear_solver.hpp"

#include <stdexcept>
#include <string>

namespace coprime {

namespace {

using i128 = __int128_t;

i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void check_solver_bounds(i64 k) {
    if (k < 2) throw std::invalid_argument("solver: modulus must be >= 2");
    if (k > kMaxSolverModulus)
        throw std::range_error("solver: modulus exceeds " + std::to_string(kMaxSolverModulus));
}

}  // namespace

EuclidTrace euclid_trace(i64 k, i64 a0) {
    check_solver_bounds(k);
    if (a0 < 1 || a0 >= k)
        throw std::invalid_argument("euclid_trace: requires 1 <= a0 < k");
    EuclidTrace t;
    t.a_seq = {k, a0};
    while (t.a_seq.back() > 1) {
        const i64 next = floor_mod(t.a_seq[t.a_seq.size() - 2], t.a_seq.back());
        if (next == 0) break;
        t.a_seq.push_back(next);
    }
    t.r = t.a_seq.size() - 1;
    return t;
}

EuclidTrace euclid_trace_with_offsets(i64 k, i64 a0, i64 b0) {
    if (b0 < 0 || b0 >= k)
        throw std::invalid_argument("euclid_trace_with_offsets: requires 0 <= b0 < k");
    EuclidTrace t = euclid_trace(k, a0);
    t.b_seq = {b0};
    // b[n] = a[n-1] - delta_{a[n-1]}(b[n-1]); note b[n] = a[n-1] when the
    // remainder vanishes, never 0.
    for (std::size_t n = 1; n < t.r; ++n)
        t.b_seq.push_back(t.a_seq[n] - floor_mod(t.b_seq[n - 1], t.a_seq[n]));
    return t;
}

i64 minimal_solution_coprime(i64 k, i64 a0, i64 b0) {
    check_solver_bounds(k);
    if (b0 < 0 || b0 >= k)
        throw std::invalid_argument("minimal_solution_coprime: requires 0 <= b0 < k");
    const i64 a = floor_mod(a0, k);
    if (gcd_i64(a, k) != 1)
        throw std::invalid_argument("minimal_solution_coprime: requires gcd(a0, k) = 1");
    if (a == 1 || b0 == 0) return b0;

    const EuclidTrace t = euclid_trace_with_offsets(k, a, b0);

    // sum_{j=0}^{r-1} b[j+1] / (a[j]*a[j+1]) as an exact reduced fraction.
    i64 num = 0, den = 1;
    for (std::size_t j = 0; j < t.r; ++j) {
        const i128 term_num = t.b_seq[j];
        const i128 term_den = static_cast<i128>(t.a_seq[j]) * t.a_seq[j + 1];
        const i128 g = gcd_i128(den, term_den);
        const i128 wide_den = static_cast<i128>(den) / g * term_den;
        i128 wide_num = static_cast<i128>(num) * (term_den / g) + term_num * (den / g);
        const i128 reduce = gcd_i128(wide_num, wide_den);
        wide_num /= reduce;
        const i128 new_den = wide_den / reduce;
        if (wide_num > 4 * static_cast<i128>(k) * k ||
            new_den > static_cast<i128>(k) * t.a_seq[j + 1])
            throw std::logic_error("minimal_solution_coprime: rational bound violated");
        num = static_cast<i64>(wide_num);
        den = static_cast<i64>(new_den);
    }

    const i128 scaled = static_cast<i128>(k) * num;
    if (scaled % den != 0)
        throw std::logic_error("minimal_solution_coprime: non-integral closed-form sum");
    return floor_mod(static_cast<i64>(scaled / den), k);
}

SolutionSet solve(const RemainderEquation& eq) {
    check_solver_bounds(eq.k);
    if (eq.c < 0 || eq.c >= eq.k)
        throw std::invalid_argument("solve: requires 0 <= c < k");

    const i64 a = floor_mod(eq.a, eq.k);
    const i64 g = a == 0 ? eq.k : gcd_i64(a, eq.k);
    const i64 target = floor_mod(eq.c - eq.b, eq.k);

    SolutionSet s;
    s.period = eq.k / g;
    if (target % g != 0) return s;  // unsolvable; not an error

    s.solvable = true;
    s.count_in_range = g;
    if (s.period == 1) {
        s.x0 = 0;  // a = 0 (mod k) and k | (c - b): every x works
        return s;
    }
    s.x0 = minimal_solution_coprime(s.period, a / g, target / g);
    return s;
}

}  // namespace coprime
