// Command-line front end: closed-form evaluation, brute-force oracle,
// parameter inspection, remainder-equation solving, exhaustive verification,
// CSV emission, and benchmarking.
//
// Exit codes: 0 success / agreement, 1 verification mismatch, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coprime/counting.hpp"
#include "coprime/linear_solver.hpp"
#include "coprime/oracle.hpp"
#include "coprime/prime_params.hpp"
#include "coprime/verify.hpp"

namespace {

using coprime::i64;

int cmd_eval(i64 two_n, i64 p) {
    std::cout << coprime::g_closed(two_n, p) << '\n';
    return 0;
}

int cmd_oracle(i64 two_n, i64 p) {
    std::cout << coprime::g_oracle(two_n, p) << '\n';
    return 0;
}

int cmd_params(i64 p) {
    const coprime::PrimeParams params = coprime::compute_params(p);
    std::cout << "p=" << params.p << " delta6=" << params.delta6 << " M=" << params.M
              << " a=" << params.a_p << " b=" << params.b_p << '\n';
    return 0;
}

void print_sequence(const char* name, const std::vector<i64>& seq) {
    std::cout << name << '=';
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) std::cout << ',';
        std::cout << seq[i];
    }
    std::cout << '\n';
}

int cmd_solve(i64 k, i64 a, i64 b, i64 c, bool trace) {
    const coprime::SolutionSet s = coprime::solve({k, a, b, c});
    if (!s.solvable) {
        std::cout << "no solution\n";
        return 0;
    }
    std::cout << "x0=" << *s.x0 << " period=" << s.period
              << " count=" << s.count_in_range << '\n';
    if (trace) {
        const i64 a0 = coprime::floor_mod(a, k);
        if (a0 >= 1) {
            const i64 target = coprime::floor_mod(c - b, k);
            if (coprime::gcd_i64(a0, k) == 1) {
                const auto t = coprime::euclid_trace_with_offsets(k, a0, target);
                print_sequence("a_seq", t.a_seq);
                print_sequence("b_seq", t.b_seq);
            } else {
                print_sequence("a_seq", coprime::euclid_trace(k, a0).a_seq);
            }
        }
    }
    return 0;
}

int cmd_verify(i64 max_even, const std::vector<i64>& primes) {
    const coprime::VerificationReport report = coprime::verify_grid(max_even, primes);
    coprime::print_report(std::cout, report);
    return coprime::report_exit_code(report);
}

int cmd_table(i64 max_even, i64 p, const std::string& format, const std::string& output) {
    if (format != "csv") throw std::invalid_argument("table: unknown format '" + format + "'");
    const coprime::PrimeParams params = coprime::compute_params(p);
    if (output.empty()) {
        coprime::write_table_csv(std::cout, max_even, params);
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::invalid_argument("table: cannot open output file '" + output + "'");
        coprime::write_table_csv(out, max_even, params);
    }
    return 0;
}

int cmd_bench(i64 max_even, i64 p) {
    coprime::print_bench(std::cout, coprime::run_bench(max_even, p));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coprime pair counting: closed-form g(2n,p) with brute-force validation"};
    app.require_subcommand(1);

    i64 two_n = 0, p = 0, k = 0, a = 0, b = 0, c = 0, max_even = 0;
    bool trace = false;
    std::string format = "csv";
    std::string output;
    std::vector<i64> primes;

    auto* eval_cmd = app.add_subcommand("eval", "closed-form count for an even 2n");
    eval_cmd->add_option("two_n", two_n, "even integer >= 2")->required();
    eval_cmd->add_option("p", p, "prime >= 5")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force count for an even 2n");
    oracle_cmd->add_option("two_n", two_n, "even integer >= 2")->required();
    oracle_cmd->add_option("p", p, "prime >= 5")->required();

    auto* params_cmd = app.add_subcommand("params", "excluded-residue parameters of p");
    params_cmd->add_option("p", p, "prime >= 5")->required();

    auto* solve_cmd = app.add_subcommand("solve", "solve delta_k(a*x+b) = c");
    solve_cmd->add_option("--k", k, "modulus >= 2")->required();
    solve_cmd->add_option("--a", a, "coefficient")->required();
    solve_cmd->add_option("--b", b, "offset")->required();
    solve_cmd->add_option("--c", c, "target residue in [0, k-1]")->required();
    solve_cmd->add_flag("--trace", trace, "print the Euclid remainder/offset sequences");

    auto* verify_cmd = app.add_subcommand("verify", "closed form vs oracle over a grid");
    verify_cmd->add_option("--max-even", max_even, "largest even 2n")->required();
    verify_cmd->add_option("--primes", primes, "comma-separated primes >= 5")
        ->required()
        ->delimiter(',');

    auto* table_cmd = app.add_subcommand("table", "CSV of g(2n,p) for even 2n up to a bound");
    table_cmd->add_option("--max-even", max_even, "largest even 2n")->required();
    table_cmd->add_option("--prime", p, "prime >= 5")->required();
    table_cmd->add_option("--format", format, "output format (csv)");
    table_cmd->add_option("--output", output, "write to file instead of stdout");

    auto* bench_cmd = app.add_subcommand("bench", "time closed form against the oracle");
    bench_cmd->add_option("--max-even", max_even, "largest even 2n")->required();
    bench_cmd->add_option("--prime", p, "prime >= 5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return cmd_eval(two_n, p);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(two_n, p);
        if (app.got_subcommand(params_cmd)) return cmd_params(p);
        if (app.got_subcommand(solve_cmd)) return cmd_solve(k, a, b, c, trace);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(max_even, primes);
        if (app.got_subcommand(table_cmd)) return cmd_table(max_even, p, format, output);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(max_even, p);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
