// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Budgets and tolerances are fixed here, not tuned at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden_dsl.hpp"
#include "random_predicates.hpp"
#include "roughstat/verify.hpp"

using namespace roughstat;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }

    void note(const std::string& text) { notes_.push_back(text); }

    ~Criterion() {
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_).count();
        bool ok = problems_.empty();
        if (!ok) ++failures;
        std::printf("[%s] criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", number_,
                    title_.c_str(), secs);
        for (const std::string& n : notes_) std::printf("       %s\n", n.c_str());
        for (const std::string& p : problems_) std::printf("       problem: %s\n", p.c_str());
        std::fflush(stdout);
    }

private:
    int number_;
    std::string title_;
    std::vector<std::string> problems_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

RoughParams params_of(double r, double alpha) {
    RoughParams p;
    p.r = r;
    p.alpha = alpha;
    return p;
}

GridSpec grid1(double lo, double hi, double step) {
    GridSpec g;
    g.axes = {{lo, hi, step}};
    return g;
}

GridSpec grid2(double lo, double hi, double step) {
    GridSpec g;
    g.axes = {{lo, hi, step}, {lo, hi, step}};
    return g;
}

void summarize_suite(Criterion& c, const SuiteReport& report, double max_seconds) {
    std::ostringstream line;
    line << report.suite << ": " << report.count(CaseStatus::Pass) << " pass, "
         << report.count(CaseStatus::Fail) << " fail, "
         << report.count(CaseStatus::Inconclusive) << " inconclusive, "
         << report.count(CaseStatus::NotApplicable) << " not-applicable";
    c.note(line.str());
    for (const SuiteCase& sc : report.cases) {
        if (sc.status == CaseStatus::Fail)
            c.expect(false, report.suite + " case failed: " + sc.description + " -- " +
                                sc.diagnostics);
        if (sc.status == CaseStatus::Inconclusive)
            c.note("inconclusive: " + sc.description);
    }
    (void)max_seconds;
}

// --------------------------------------------------------------- criteria ---

void criterion_1() {
    Criterion c(1, "limit-set reproduction for the square-excursion sequence");
    auto started = std::chrono::steady_clock::now();
    auto cps = default_checkpoints(1'000'000);
    auto table = materialize(dsl::builtin("EX_A"), cps.horizon());
    auto grid = grid1(-4.0, 4.0, 0.05);

    auto empty = estimate_limit_set(table, params_of(0.5, 1.0), cps, NormKind::L2, grid);
    c.expect(empty.accepted_count() == 0, "r=0.5 must give an empty accepted set");

    auto mid = estimate_limit_set(table, params_of(1.5, 1.0), cps, NormKind::L2, grid);
    c.expect(mid.hull.has_value(), "r=1.5 must give a nonempty set");
    if (mid.hull) {
        c.expect(std::abs(mid.hull->first[0] + 0.5) < 1e-6, "r=1.5 hull min must be -0.50");
        c.expect(std::abs(mid.hull->second[0] - 0.5) < 1e-6, "r=1.5 hull max must be +0.50");
    }

    auto wide = estimate_limit_set(table, params_of(2.0, 1.0), cps, NormKind::L2, grid);
    c.expect(wide.hull.has_value(), "r=2 must give a nonempty set");
    if (wide.hull) {
        c.expect(std::abs(wide.hull->first[0] + 1.0) < 1e-6, "r=2 hull min must be -1.00");
        c.expect(std::abs(wide.hull->second[0] - 1.0) < 1e-6, "r=2 hull max must be +1.00");
    }

    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - started).count();
    c.note("hulls: r=0.5 empty, r=1.5 [-0.5, 0.5], r=2 [-1, 1]");
    c.expect(secs <= 60.0, "runtime target 60 s exceeded: " + fmt_double(secs));
}

void criterion_2() {
    Criterion c(2, "order threshold 1/3 for the cube indicator");
    auto started = std::chrono::steady_clock::now();
    auto cps = default_checkpoints(1'000'000);
    auto table = materialize(dsl::builtin("CUBE_INDICATOR"), cps.horizon());
    const Point xi{{0.0}};

    for (double alpha : {0.4, 0.5, 1.0}) {
        auto report = test_rough_convergence(table, xi, params_of(0.1, alpha), cps,
                                             NormKind::L2);
        c.expect(report.verdict == ConvergenceVerdict::Converges,
                 "alpha=" + fmt_double(alpha) + " must Converge, got " +
                     to_string(report.verdict));
    }
    for (double alpha : {0.2, 0.3}) {
        auto report = test_rough_convergence(table, xi, params_of(0.1, alpha), cps,
                                             NormKind::L2);
        c.expect(report.verdict == ConvergenceVerdict::Diverges,
                 "alpha=" + fmt_double(alpha) + " must Diverge, got " +
                     to_string(report.verdict));
    }

    auto at_third = test_rough_convergence(table, xi, params_of(0.1, 1.0 / 3.0), cps,
                                           NormKind::L2);
    const auto& binding = at_third.per_eps.back().second;
    c.expect(binding.verdict != Verdict::Zero,
             "at alpha=1/3 the bad-set verdict must be NonZero or Inconclusive");
    c.note("alpha=1/3: verdict " + to_string(binding.verdict) + ", final ratio " +
           fmt_double(binding.final_ratio) + ", slope " + fmt_double(binding.slope));

    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - started).count();
    c.expect(secs <= 30.0, "runtime target 30 s exceeded: " + fmt_double(secs));
}

void criterion_3() {
    Criterion c(3, "accepted sets of constants match the closed ball");
    auto cps = default_checkpoints(100'000);
    const double eps_min = RoughParams{}.eps_min();

    struct BallCase {
        const char* builtin;
        Point centre;
        GridSpec grid;
    };
    const BallCase cases[] = {
        {"CONST:0.3", Point{{0.3}}, grid1(-2.0, 2.0, 0.05)},
        {"CONST:0.5,-0.25", Point{{0.5, -0.25}}, grid2(-2.0, 2.0, 0.05)},
    };
    for (const BallCase& bc : cases) {
        auto table = materialize(dsl::builtin(bc.builtin), cps.horizon());
        for (double r : {0.5, 1.0}) {
            auto est = estimate_limit_set(table, params_of(r, 1.0), cps, NormKind::L2,
                                          bc.grid);
            const double step = bc.grid.max_step();
            std::size_t wrong_in = 0, wrong_out = 0;
            for (std::size_t i = 0; i < est.grid.size(); ++i) {
                double d = distance(est.grid[i], bc.centre, NormKind::L2);
                if (d <= r - step && !est.accepted[i]) ++wrong_in;
                if (d >= r + eps_min + step && est.accepted[i]) ++wrong_out;
            }
            std::string label = std::string(bc.builtin) + ", r=" + fmt_double(r);
            c.expect(wrong_in == 0,
                     label + ": " + std::to_string(wrong_in) + " interior points rejected");
            c.expect(wrong_out == 0,
                     label + ": " + std::to_string(wrong_out) + " exterior points accepted");
            c.expect(est.accepted_count() > 0, label + ": empty accepted set");
        }
    }
}

void criterion_4() {
    Criterion c(4, "decomposition through the radial projection, forward and converse");
    auto report = check_decomposition(builtin_corpus(), {0.5, 1.5}, {0.5, 1.0});
    summarize_suite(c, report, 0);
    // Residuals are embedded per case; re-assert the contract bound explicitly.
    for (const SuiteCase& sc : report.cases)
        if (sc.diagnostics.find("residuals exceed") != std::string::npos)
            c.expect(false, sc.description);
}

void criterion_5() {
    Criterion c(5, "property suites report zero failed cases at default budgets");
    for (const char* name : {"contiguity", "cluster", "linearity", "monotonicity",
                             "boundedness", "midpoint"}) {
        auto report = run_suite(name, builtin_corpus());
        summarize_suite(c, report, 0);
    }
}

void criterion_6() {
    Criterion c(6, "diameter exploration over the corpus");
    auto report = explore_diameter(builtin_corpus(), {0.5, 1.0, 2.0}, {0.25, 0.5, 0.75});
    c.expect(report.ok(), "exploration must complete without failed cases");
    bool summary_seen = false;
    for (const SuiteCase& sc : report.cases) {
        if (sc.description.find("max diameter/2r ratio") != std::string::npos) {
            summary_seen = true;
            c.note(sc.description);
        }
        if (sc.description.find("RATIO ABOVE 2r BOUND") != std::string::npos)
            c.note("FLAGGED: " + sc.description);
    }
    c.expect(summary_seen, "missing max-ratio summary");
}

void criterion_7() {
    Criterion c(7, "prefix counts equal an independent recount on 100 random predicates");
    std::mt19937 rng(20260810);
    auto cps = default_checkpoints(100'000);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::string text = roughstat::testing::random_predicate_text(rng);
        auto pred = dsl::parse_predicate(text);
        auto pc = prefix_counts(pred, cps);
        for (std::size_t j = 0; j < cps.size(); ++j) {
            index_t recount = 0;
            for (index_t k = 1; k <= cps.values[j]; ++k)
                if (dsl::eval_predicate(pred, k)) ++recount;
            if (pc.counts[j] != recount) {
                c.expect(false, "mismatch for `" + text + "` at n=" +
                                    std::to_string(cps.values[j]));
                break;
            }
        }
        ++checked;
    }
    c.note(std::to_string(checked) + " predicates recounted exactly at N=1e5");
}

void criterion_8() {
    Criterion c(8, "parser golden corpus and malformed-input offsets");
    const auto& golden = roughstat::testing::golden_cases();
    c.expect(golden.size() >= 30, "golden corpus must hold at least 30 programs");
    for (const auto& gc : golden) {
        try {
            auto spec = dsl::parse_sequence(gc.text);
            Point p = dsl::eval_sequence(spec, gc.k);
            bool match = p.dim() == static_cast<int>(gc.expected.size());
            for (int d = 0; match && d < p.dim(); ++d)
                match = std::abs(p[d] - gc.expected[static_cast<std::size_t>(d)]) <=
                        1e-12 * std::max(1.0, std::abs(gc.expected[static_cast<std::size_t>(d)]));
            if (!match) c.expect(false, "wrong value for `" + gc.text + "`");
            if (!dsl::spec_equal(spec, dsl::parse_sequence(dsl::pretty_print(spec))))
                c.expect(false, "round-trip failed for `" + gc.text + "`");
        } catch (const Error& e) {
            c.expect(false, "failed to parse/evaluate `" + gc.text + "`: " + e.what());
        }
    }
    const auto& malformed = roughstat::testing::malformed_cases();
    c.expect(malformed.size() >= 10, "need at least 10 malformed programs");
    for (const auto& mc : malformed) {
        try {
            dsl::parse_sequence(mc.text);
            c.expect(false, "`" + mc.text + "` must not parse");
        } catch (const ParseError& e) {
            if (e.offset != mc.offset)
                c.expect(false, "`" + mc.text + "`: offset " + std::to_string(e.offset) +
                                    ", expected " + std::to_string(mc.offset));
        }
    }
    c.note(std::to_string(golden.size()) + " golden programs, " +
           std::to_string(malformed.size()) + " malformed programs");
}

} // namespace

int main() {
    std::printf("acceptance suite (defaults: N=1e6, grid step 0.05, eps ladder 0.5/0.1/0.02)\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0) std::printf("all acceptance criteria pass\n");
    else std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
