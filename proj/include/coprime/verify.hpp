#pragma once

#include <iosfwd>
#include <vector>

#include "coprime/prime_params.hpp"
#include "coprime/residue.hpp"

namespace coprime {

struct Mismatch {
    i64 p;
    i64 two_n;
    i64 closed_value;
    i64 oracle_value;
};

/// Outcome of a closed-form vs oracle sweep over even two_n in [2, max_even]
/// and a list of primes. Mismatches are sorted by (p, two_n); the report is
/// byte-identical for any worker count.
struct VerificationReport {
    i64 max_even = 0;
    std::vector<i64> primes;
    i64 cases_checked = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_closed_s = 0.0;
    double elapsed_oracle_s = 0.0;
};

/// Full-grid comparison, grid cells sharded across OpenMP workers.
VerificationReport verify_grid(i64 max_even, const std::vector<i64>& primes);

/// Plain-loop reference sweep; must produce the same report (timings aside).
VerificationReport verify_grid_serial(i64 max_even, const std::vector<i64>& primes);

/// 0 on agreement, 1 on any mismatch.
int report_exit_code(const VerificationReport& report);

/// Human-readable summary plus one machine-readable line per mismatch.
void print_report(std::ostream& os, const VerificationReport& report);

/// CSV rows "two_n,g" for even two_n in [2, max_even], ascending, LF line
/// endings. max_even < 2 yields the header only.
void write_table_csv(std::ostream& os, i64 max_even, const PrimeParams& params);

/// Timing comparison of the closed form against the brute-force oracle over
/// the same grid, plus per-call probes of the closed form at fixed two_n.
struct BenchReport {
    i64 max_even = 0;
    i64 p = 0;
    i64 evals = 0;
    i64 closed_total = 0;  // sum of counts over the grid
    i64 oracle_total = 0;  // must equal closed_total
    double closed_s = 0.0;
    double oracle_s = 0.0;
    struct Probe {
        i64 two_n;
        double ns_per_call;
    };
    std::vector<Probe> probes;
};

BenchReport run_bench(i64 max_even, i64 p);
void print_bench(std::ostream& os, const BenchReport& report);

}  // namespace coprime
