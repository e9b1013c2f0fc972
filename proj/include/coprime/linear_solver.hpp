#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coprime/residue.hpp"

namespace coprime {

// Largest modulus accepted by the closed-formula solver. Keeps every reduced
// rational intermediate of the telescoping sum inside int64 (den <= k*a0,
// num < 4*k^2); the pre-reduction arithmetic runs in 128 bits.
inline constexpr i64 kMaxSolverModulus = 1'000'000'000;

/// The equation delta_k(a*x + b) = c over the integers.
struct RemainderEquation {
    i64 k;  // modulus, >= 2
    i64 a;
    i64 b;
    i64 c;  // target residue, in [0, k-1]
};

/// Remainder sequences of the Euclidean algorithm on (k, a0).
///
/// a_seq[0] = k, a_seq[1] = a0, a_seq[n] = a_seq[n-2] mod a_seq[n-1], kept up
/// to the last nonzero term; a_seq[r] = gcd(a0, k). b_seq, when populated,
/// holds the offset sequence b[1] = b0, b[n] = a_seq[n-1] - (b[n-1] mod
/// a_seq[n-1]) used by the closed-formula back-substitution (r entries,
/// stored from b[1]).
struct EuclidTrace {
    std::vector<i64> a_seq;
    std::vector<i64> b_seq;
    std::size_t r = 0;
};

/// Remainder sequence for 1 <= a0 < k. a0 = 1 terminates immediately (r = 1).
EuclidTrace euclid_trace(i64 k, i64 a0);

/// Same trace with the offset sequence for b0 in [0, k-1] filled in.
EuclidTrace euclid_trace_with_offsets(i64 k, i64 a0, i64 b0);

/// Least x in [0, k-1] with delta_k(a0*x) = b0, requiring gcd(a0, k) = 1.
///
/// a0 is normalized to delta_k(a0) first; the result is the exact integer
/// delta_k(k * sum_j b[j+1] / (a[j]*a[j+1])), accumulated as a reduced
/// rational pair. A non-integral final sum is a hard internal error.
i64 minimal_solution_coprime(i64 k, i64 a0, i64 b0);

/// Solution set of delta_k(a*x + b) = c within one period [0, k-1].
struct SolutionSet {
    bool solvable = false;
    std::optional<i64> x0;   // least solution, present iff solvable
    i64 period = 0;          // k / gcd(a, k)
    i64 count_in_range = 0;  // gcd(a, k) solutions when solvable, else 0
};

/// Existence test and full structure: solvable iff gcd(a, k) | (c - b); the
/// non-coprime case divides the equation through by the gcd and reuses the
/// coprime solver on the reduced modulus.
SolutionSet solve(const RemainderEquation& eq);

}  // namespace coprime
