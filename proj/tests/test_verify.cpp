#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "roughstat/verify.hpp"

using namespace roughstat;

namespace {

SuiteBudget small_budget() {
    SuiteBudget b;
    b.horizon = 100'000;
    return b;
}

const SuiteCase* find_case(const SuiteReport& report, const std::string& needle) {
    for (const SuiteCase& c : report.cases)
        if (c.description.find(needle) != std::string::npos) return &c;
    return nullptr;
}

void dump_failures(const SuiteReport& report) {
    for (const SuiteCase& c : report.cases)
        if (c.status == CaseStatus::Fail)
            MESSAGE(report.suite << " FAIL: " << c.description << " | " << c.diagnostics);
}

} // namespace

TEST_CASE("builtin corpus shape") {
    auto corpus = builtin_corpus();
    CHECK(corpus.size() >= 8);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            CHECK(corpus[i].name != corpus[j].name);
    const CorpusEntry* linf = nullptr;
    for (const auto& e : corpus)
        if (e.norm == NormKind::LInf) linf = &e;
    REQUIRE(linf != nullptr); // midpoint suite needs a non-strictly-convex case
}

TEST_CASE("boundedness equivalence suite") {
    auto report = check_boundedness_equivalence(builtin_corpus(), 1.0,
                                                {0.5, 1.5, 4.0, 16.0, 64.0}, small_budget());
    dump_failures(report);
    CHECK(report.ok());

    auto* ex_a = find_case(report, "EX_A:");
    REQUIRE(ex_a != nullptr);
    CHECK(ex_a->status == CaseStatus::Pass);
    CHECK(ex_a->description.find("Bounded(M=2)") != std::string::npos);

    auto* linear = find_case(report, "LINEAR:");
    REQUIRE(linear != nullptr);
    CHECK(linear->status == CaseStatus::Pass);
    CHECK(linear->description.find("NotDetected") != std::string::npos);

    auto* const0 = find_case(report, "CONST_0:");
    REQUIRE(const0 != nullptr);
    CHECK(const0->description.find("Bounded(M=1)") != std::string::npos);
}

TEST_CASE("contiguity suite") {
    auto report = check_contiguity(builtin_corpus(), {0.5, 1.0, 2.0}, 1.0, small_budget());
    dump_failures(report);
    CHECK(report.ok());

    auto* ex_a_r2 = find_case(report, "EX_A, r=2");
    REQUIRE(ex_a_r2 != nullptr);
    CHECK(ex_a_r2->status == CaseStatus::Pass);
    CHECK(ex_a_r2->description.find("hull [-1, 1]") != std::string::npos);

    auto* ex_a_r05 = find_case(report, "EX_A, r=0.5");
    REQUIRE(ex_a_r05 != nullptr);
    CHECK(ex_a_r05->description.find("vacuous") != std::string::npos);

    auto* const2d = find_case(report, "CONST2D_0, r=1");
    REQUIRE(const2d != nullptr);
    CHECK(const2d->status == CaseStatus::Pass);
}

TEST_CASE("decomposition suite") {
    auto report = check_decomposition(builtin_corpus(), {0.5, 1.5}, {0.5, 1.0}, small_budget());
    dump_failures(report);
    CHECK(report.ok());

    auto* fwd = find_case(report, "EX_A forward, r=1.5, alpha=1");
    REQUIRE(fwd != nullptr);
    CHECK(fwd->status == CaseStatus::Pass);

    auto* conv = find_case(report, "CONST_0 converse, r=1");
    REQUIRE(conv != nullptr);
    CHECK(conv->status == CaseStatus::Pass);

    // the square indicator is not statistically convergent of order 1/2
    auto* sq = find_case(report, "SQUARE_INDICATOR converse, r=0.5, alpha=0.5");
    REQUIRE(sq != nullptr);
    CHECK(sq->status == CaseStatus::NotApplicable);
}

TEST_CASE("decomposition forward on the cube indicator below the usual orders") {
    std::vector<CorpusEntry> cube;
    for (const auto& e : builtin_corpus())
        if (e.name == "CUBE_INDICATOR") cube.push_back(e);
    REQUIRE(cube.size() == 1);
    auto report = check_decomposition(cube, {0.5}, {0.4}, small_budget());
    dump_failures(report);
    CHECK(report.ok());
    auto* fwd = find_case(report, "CUBE_INDICATOR forward, r=0.5, alpha=0.4");
    REQUIRE(fwd != nullptr);
    CHECK(fwd->status == CaseStatus::Pass);
    CHECK(fwd->description.find("candidates") != std::string::npos);
}

TEST_CASE("cluster distance suite") {
    auto report = check_cluster_distance(builtin_corpus(), {0.2, 1.0, 1.5}, 1.0, 0.1,
                                         small_budget());
    dump_failures(report);
    CHECK(report.ok());
    auto* ex_a = find_case(report, "EX_A, r=1.5");
    REQUIRE(ex_a != nullptr);
    CHECK(ex_a->status == CaseStatus::Pass);
}

TEST_CASE("midpoint strict convexity suite") {
    auto report = check_midpoint_strict_convexity(builtin_corpus(), 1.0, 1.0, small_budget());
    dump_failures(report);
    CHECK(report.ok());

    auto* origin = find_case(report, "NOISY2D_ORIGIN");
    REQUIRE(origin != nullptr);
    CHECK(origin->status == CaseStatus::Pass);

    auto* shift = find_case(report, "NOISY2D_SHIFT");
    REQUIRE(shift != nullptr);
    CHECK(shift->status == CaseStatus::Pass);

    auto* linf = find_case(report, "NOISY2D_LINF");
    REQUIRE(linf != nullptr);
    CHECK(linf->status == CaseStatus::NotApplicable);
}

TEST_CASE("linearity suite") {
    auto report = check_linearity(builtin_corpus(), {2.0, 0.5, -1.0, 0.0}, 1.5, 1.0,
                                  small_budget());
    dump_failures(report);
    CHECK(report.ok());

    auto* sum = find_case(report, "sum(EX_A, CONST_2P5)");
    REQUIRE(sum != nullptr);
    CHECK(sum->status == CaseStatus::Pass);

    auto* zero = find_case(report, "EX_A, c=0");
    REQUIRE(zero != nullptr);
    CHECK(zero->status == CaseStatus::Pass);
}

TEST_CASE("order monotonicity suite") {
    auto report = check_order_monotonicity(
        builtin_corpus(), {{0.4, 0.8}, {0.3, 0.4}, {0.5, 1.0}, {0.25, 0.75}}, 0.1,
        small_budget());
    dump_failures(report);
    CHECK(report.ok());

    auto* cube = find_case(report, "CUBE_INDICATOR at xi=(0), (alpha, beta)=(0.4, 0.8)");
    REQUIRE(cube != nullptr);
    CHECK(cube->status == CaseStatus::Pass);
    CHECK(cube->description.find("Converges -> Converges") != std::string::npos);

    auto* cube_low = find_case(report, "CUBE_INDICATOR at xi=(0), (alpha, beta)=(0.3, 0.4)");
    REQUIRE(cube_low != nullptr);
    CHECK(cube_low->status == CaseStatus::Pass);
    CHECK(cube_low->description.find("vacuous") != std::string::npos);

    CHECK_THROWS_AS(check_order_monotonicity(builtin_corpus(), {{0.8, 0.4}}, 0.1,
                                             small_budget()),
                    InvalidInput);
}

TEST_CASE("diameter explorer") {
    auto report = explore_diameter(builtin_corpus(), {0.5, 1.0, 2.0}, {0.25, 0.5, 0.75},
                                   small_budget());
    CHECK(report.ok());
    auto* summary = find_case(report, "max diameter/2r ratio");
    REQUIRE(summary != nullptr);
    CHECK(summary->description.find("no nonempty sets") == std::string::npos);

    // reference ratios: a ball fills 2r, the square-excursion hull is half of 4
    auto* ball = find_case(report, "CONST_0, r=1, alpha=0.5:");
    REQUIRE(ball != nullptr);
    CHECK(ball->description.ends_with("ratio 1"));
    auto* ex_a = find_case(report, "EX_A, r=2, alpha=0.75:");
    REQUIRE(ex_a != nullptr);
    CHECK(ex_a->description.ends_with("ratio 0.5"));
    auto* cube = find_case(report, "CUBE_INDICATOR, r=0.5, alpha=0.5:");
    REQUIRE(cube != nullptr);
    CHECK(cube->description.ends_with("diameter 1, ratio 1"));

    CHECK_THROWS_AS(explore_diameter(builtin_corpus(), {0.5}, {1.0}, small_budget()),
                    InvalidInput);
    CHECK_THROWS_AS(explore_diameter(builtin_corpus(), {-0.5}, {0.5}, small_budget()),
                    InvalidInput);
}

TEST_CASE("suites are deterministic") {
    auto a = check_boundedness_equivalence(builtin_corpus(), 1.0, {0.5, 1.5}, small_budget());
    auto b = check_boundedness_equivalence(builtin_corpus(), 1.0, {0.5, 1.5}, small_budget());
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].description == b.cases[i].description);
        CHECK(a.cases[i].status == b.cases[i].status);
        CHECK(a.cases[i].diagnostics == b.cases[i].diagnostics);
    }
}

TEST_CASE("run_suite dispatcher") {
    CHECK(suite_names().size() == 8);
    CHECK_THROWS_AS(run_suite("no-such-suite", builtin_corpus(), small_budget()),
                    InvalidInput);
}

TEST_CASE("corpus files load and reject duplicates") {
    const char* path = "test_corpus_tmp.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "mine = if n % 3 == 0 then 1 else 0\n";
        out << "builtin_ref = EX_A\n";
        out << "\n";
    }
    auto corpus = load_corpus_file(path);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0].name == "mine");
    CHECK(dsl::eval_sequence(corpus[0].spec, 3)[0] == 1.0);
    CHECK(dsl::spec_equal(corpus[1].spec, dsl::builtin("EX_A")));

    {
        std::ofstream out(path);
        out << "a = n\na = n + 1\n";
    }
    CHECK_THROWS_AS(load_corpus_file(path), InvalidInput);

    {
        std::ofstream out(path);
        out << "not a valid line\n";
    }
    CHECK_THROWS_AS(load_corpus_file(path), InvalidInput);
    std::remove(path);
    CHECK_THROWS_AS(load_corpus_file("definitely_missing.txt"), InvalidInput);
}
