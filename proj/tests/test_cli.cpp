#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "roughstat/cli.hpp"

using roughstat::run_cli;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("converge subcommand reproduces the interval law") {
    auto pass = run({"converge", "--seq", "EX_A", "--xi", "0", "--r", "1.5",
                     "--alpha", "1", "--n", "100000"});
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("verdict: Converges") != std::string::npos);

    auto fail = run({"converge", "--seq", "EX_A", "--xi", "0", "--r", "0.5",
                     "--alpha", "1", "--n", "100000"});
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("verdict: Diverges") != std::string::npos);
}

TEST_CASE("density subcommand emits ratios and verdict-based exit codes") {
    auto zero = run({"density", "--pred", "is_cube(n)", "--alpha", "0.4", "--n", "1000000",
                     "--format", "csv"});
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.rfind("n,count,ratio\n", 0) == 0);
    CHECK(zero.out.find("1000000,100,") != std::string::npos);

    auto nonzero = run({"density", "--pred", "is_cube(n)", "--alpha", "0.3", "--n", "1000000"});
    CHECK(nonzero.exit_code == 1);
}

TEST_CASE("limitset subcommand: empty set exits 1") {
    auto empty = run({"limitset", "--seq", "EX_A", "--r", "0.5", "--alpha", "1",
                      "--grid", "-4:4:0.05", "--n", "100000"});
    CHECK(empty.exit_code == 1);
    CHECK(empty.out.find("accepted set empty") != std::string::npos);

    auto full = run({"limitset", "--seq", "EX_A", "--r", "2", "--alpha", "1",
                     "--grid", "-4:4:0.05", "--n", "100000"});
    CHECK(full.exit_code == 0);
    CHECK(full.out.find("hull: min (-1), max (1)") != std::string::npos);
}

TEST_CASE("malformed DSL exits 2 with the byte offset") {
    auto bad = run({"converge", "--seq", "1 ++ 2", "--xi", "0", "--r", "1"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("offset 3") != std::string::npos);

    auto unknown_flag = run({"converge", "--nope", "1"});
    CHECK(unknown_flag.exit_code == 2);

    auto no_sub = run({});
    CHECK(no_sub.exit_code == 2);
}

TEST_CASE("bounded subcommand exit codes") {
    CHECK(run({"bounded", "--seq", "EX_A", "--n", "100000"}).exit_code == 0);
    CHECK(run({"bounded", "--seq", "LINEAR", "--n", "100000"}).exit_code == 1);
}

TEST_CASE("cluster subcommand finds the alternation clusters") {
    auto res = run({"cluster", "--seq", "ALT:-1,1", "--alpha", "1", "--n", "50000",
                    "--grid", "-2:2:0.05", "--format", "csv"});
    CHECK(res.exit_code == 0);
    // every positive candidate lies within the eps-neighborhood of -1 or +1
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line); // header
    int positives = 0;
    while (std::getline(lines, line)) {
        auto comma = line.find(',');
        double c = std::stod(line.substr(0, comma));
        bool positive = line[comma + 1] == '1';
        if (positive) {
            ++positives;
            CHECK(std::min(std::abs(c - 1.0), std::abs(c + 1.0)) < 0.1 + 1e-9);
        }
        if (std::abs(c - 1.0) < 1e-9 || std::abs(c + 1.0) < 1e-9) CHECK(positive);
    }
    CHECK(positives >= 6);
}

TEST_CASE("project subcommand checks the contract") {
    auto res = run({"project", "--seq", "CONST:5", "--xi", "0", "--r", "2",
                    "--n", "10000", "--preview", "3"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("y=(3)") != std::string::npos);
}

TEST_CASE("deterministic JSON output is byte-identical across runs") {
    std::vector<std::string> args = {"converge", "--seq", "EX_A", "--xi", "0",
                                     "--r", "1.5", "--n", "50000",
                                     "--format", "json", "--deterministic"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"meta\"") == std::string::npos);
    CHECK(a.out.find("\"config\"") != std::string::npos);
    CHECK(a.out.find("\"verdict\": \"Converges\"") != std::string::npos);

    auto with_meta = run({"converge", "--seq", "EX_A", "--xi", "0", "--r", "1.5",
                          "--n", "50000", "--format", "json"});
    CHECK(with_meta.out.find("\"meta\"") != std::string::npos);
    CHECK(with_meta.out.find("\"generated_at\"") != std::string::npos);
}

TEST_CASE("inconclusive headline verdicts exit 3") {
    // Cube indicator at alpha exactly 1/3: ratio ~1, slope ~0.
    auto res = run({"converge", "--seq", "CUBE_INDICATOR", "--xi", "0", "--r", "0.1",
                    "--alpha", "0.33333333333333333", "--n", "1000000"});
    CHECK((res.exit_code == 1 || res.exit_code == 3));
    CHECK(res.exit_code != 0);
}

TEST_CASE("verify subcommand runs a single suite") {
    auto res = run({"verify", "--suite", "midpoint", "--n", "50000"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("suite midpoint") != std::string::npos);
    CHECK(res.out.find("not-applicable") != std::string::npos);

    auto bad = run({"verify", "--suite", "bogus", "--n", "50000"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("explore-diameter subcommand reports ratios") {
    auto res = run({"explore-diameter", "--r-list", "0.5", "--alpha-list", "0.5",
                    "--n", "50000", "--format", "csv"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("max diameter/2r ratio") != std::string::npos);
}

TEST_CASE("reports write to --out and ratios dump to a CSV file") {
    const char* out_path = "cli_out_tmp.json";
    const char* dump_path = "cli_ratios_tmp.csv";
    auto res = run({"density", "--pred", "is_square(n)", "--alpha", "1", "--n", "10000",
                    "--format", "json", "--deterministic", "--out", out_path,
                    "--dump-ratios", dump_path});
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    std::ifstream out_file(out_path);
    REQUIRE(out_file.good());
    std::stringstream content;
    content << out_file.rdbuf();
    CHECK(content.str().find("\"subcommand\": \"density\"") != std::string::npos);
    std::ifstream dump_file(dump_path);
    REQUIRE(dump_file.good());
    std::string header;
    std::getline(dump_file, header);
    CHECK(header == "n,ratio");
    std::remove(out_path);
    std::remove(dump_path);
}

TEST_CASE("corpus flag replaces the builtin corpus") {
    const char* path = "cli_corpus_tmp.txt";
    {
        std::ofstream out(path);
        out << "ones = 1\n";
    }
    auto res = run({"verify", "--suite", "boundedness", "--corpus", path, "--n", "50000"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ones:") != std::string::npos);
    std::remove(path);
}
