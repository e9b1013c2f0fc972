#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "coprime/verify.hpp"

using namespace coprime;

TEST_SUITE("verify") {

TEST_CASE("parallel sweep matches the serial reference") {
    const std::vector<i64> primes{5, 7, 11};
    const VerificationReport par = verify_grid(2000, primes);
    const VerificationReport ser = verify_grid_serial(2000, primes);
    CHECK(par.max_even == ser.max_even);
    CHECK(par.primes == ser.primes);
    CHECK(par.cases_checked == ser.cases_checked);
    CHECK(par.cases_checked == 3000);
    CHECK(par.mismatches.empty());
    CHECK(ser.mismatches.empty());
}

TEST_CASE("exit code contract") {
    VerificationReport report;
    CHECK(report_exit_code(report) == 0);
    report.mismatches.push_back({5, 10, 1, 2});
    CHECK(report_exit_code(report) == 1);
}

TEST_CASE("report rendering") {
    VerificationReport report;
    report.max_even = 100;
    report.primes = {5, 7};
    report.cases_checked = 100;
    std::ostringstream out;
    print_report(out, report);
    const std::string text = out.str();
    CHECK(text.find("verify: max_even=100 primes=5,7\n") != std::string::npos);
    CHECK(text.find("cases checked: 100\n") != std::string::npos);
    CHECK(text.find("mismatches: 0\n") != std::string::npos);
    CHECK(text.find("PASS\n") != std::string::npos);

    report.mismatches.push_back({7, 42, 3, 4});
    std::ostringstream out_bad;
    print_report(out_bad, report);
    CHECK(out_bad.str().find("mismatch p=7 two_n=42 closed=3 oracle=4\n") != std::string::npos);
    CHECK(out_bad.str().find("FAIL\n") != std::string::npos);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(verify_grid(0, {5}), std::invalid_argument);
    CHECK_THROWS_AS(verify_grid(100, {}), std::invalid_argument);
    CHECK_THROWS_AS(verify_grid(100, {4}), std::invalid_argument);
    CHECK_THROWS_AS(verify_grid(100, {5, 9}), std::invalid_argument);
}

TEST_CASE("csv table is byte-exact and deterministic") {
    const PrimeParams p5 = compute_params(5);
    std::ostringstream a, b;
    write_table_csv(a, 6, p5);
    write_table_csv(b, 6, p5);
    CHECK(a.str() == "two_n,g\n2,1\n4,0\n6,0\n");
    CHECK(a.str() == b.str());

    std::ostringstream empty;
    write_table_csv(empty, 0, p5);
    CHECK(empty.str() == "two_n,g\n");

    std::ostringstream one;
    write_table_csv(one, 2, compute_params(7));
    CHECK(one.str() == "two_n,g\n2,1\n");
}

TEST_CASE("bench smoke run") {
    const BenchReport report = run_bench(200, 5);
    CHECK(report.evals == 100);
    CHECK(report.closed_total == report.oracle_total);
    CHECK(report.closed_s >= 0.0);
    CHECK(report.oracle_s >= 0.0);
    REQUIRE(report.probes.size() == 3);
    for (const auto& probe : report.probes) CHECK(probe.ns_per_call > 0.0);
    CHECK_THROWS_AS(run_bench(0, 5), std::invalid_argument);
}

}  // TEST_SUITE
