#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* path = std::getenv("COPRIME_CLI");
    REQUIRE_MESSAGE(path != nullptr, "COPRIME_CLI must point at the CLI binary");
    return path;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints the count") {
    RunResult r = run_cli("eval 26 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("eval 2 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("eval usage errors") {
    CHECK(run_cli("eval 27 5").exit_code == 2);   // odd
    CHECK(run_cli("eval 0 5").exit_code == 2);
    CHECK(run_cli("eval 26 9").exit_code == 2);   // composite
    CHECK(run_cli("eval 26").exit_code == 2);     // missing argument
    CHECK(run_cli("eval x 5").exit_code == 2);
}

TEST_CASE("oracle subcommand") {
    RunResult r = run_cli("oracle 26 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
    CHECK(run_cli("oracle 27 5").exit_code == 2);
}

TEST_CASE("params output") {
    RunResult r = run_cli("params 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p=7 delta6=1 M=1 a=1 b=5\n");

    r = run_cli("params 5");
    CHECK(r.out == "p=5 delta6=5 M=0 a=4 b=0\n");

    CHECK(run_cli("params 9").exit_code == 2);
}

TEST_CASE("solve with trace reproduces the worked example") {
    const RunResult r = run_cli("solve --k 13 --a 5 --b 0 --c 4 --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x0=6 period=13 count=1\n") != std::string::npos);
    CHECK(r.out.find("a_seq=13,5,3,2,1\n") != std::string::npos);
    CHECK(r.out.find("b_seq=4,1,2,2\n") != std::string::npos);
}

TEST_CASE("solve reports structure and non-existence") {
    RunResult r = run_cli("solve --k 6 --a 2 --b 0 --c 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "no solution\n");

    r = run_cli("solve --k 6 --a 2 --b 0 --c 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x0=2 period=3 count=2\n");

    r = run_cli("solve --k 12 --a 8 --b 0 --c 4 --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x0=2 period=3 count=4\n") != std::string::npos);
    CHECK(r.out.find("a_seq=12,8,4\n") != std::string::npos);
    CHECK(r.out.find("b_seq=") == std::string::npos);  // non-coprime: no offsets

    CHECK(run_cli("solve --k 6 --a 2 --b 0 --c 6").exit_code == 2);
    CHECK(run_cli("solve --k 6 --a 2 --b 0").exit_code == 2);
}

TEST_CASE("verify agreement and exit codes") {
    const RunResult r = run_cli("verify --max-even 200 --primes 5,7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cases checked: 200\n") != std::string::npos);
    CHECK(r.out.find("mismatches: 0\n") != std::string::npos);
    CHECK(r.out.find("PASS\n") != std::string::npos);

    CHECK(run_cli("verify --max-even 100 --primes 4").exit_code == 2);
    CHECK(run_cli("verify --max-even 1 --primes 5").exit_code == 2);
    CHECK(run_cli("verify --max-even 100").exit_code == 2);
}

TEST_CASE("table emits byte-exact CSV") {
    RunResult r = run_cli("table --max-even 6 --prime 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "two_n,g\n2,1\n4,0\n6,0\n");

    r = run_cli("table --max-even 2 --prime 7");
    CHECK(r.out == "two_n,g\n2,1\n");

    r = run_cli("table --max-even 0 --prime 5");  // empty range: header only
    CHECK(r.exit_code == 0);
    CHECK(r.out == "two_n,g\n");

    CHECK(run_cli("table --max-even 4 --prime 5 --format xml").exit_code == 2);
}

TEST_CASE("table output is identical across runs") {
    const RunResult a = run_cli("table --max-even 400 --prime 11");
    const RunResult b = run_cli("table --max-even 400 --prime 11");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("table writes the same bytes to a file") {
    const RunResult direct = run_cli("table --max-even 50 --prime 5");
    const RunResult to_file = run_cli("table --max-even 50 --prime 5 --output cli_table_out.csv");
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());

    FILE* f = fopen("cli_table_out.csv", "rb");
    REQUIRE(f != nullptr);
    std::string content;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, got);
    fclose(f);
    std::remove("cli_table_out.csv");
    CHECK(content == direct.out);
}

TEST_CASE("bench runs and validates input") {
    const RunResult r = run_cli("bench --max-even 2 --prime 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("speedup:") != std::string::npos);
    CHECK(run_cli("bench --max-even 0 --prime 5").exit_code == 2);
}

TEST_CASE("top-level usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate 1 2").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

}  // TEST_SUITE
