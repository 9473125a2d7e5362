#pragma once

// Theorem-by-theorem empirical verification suites over a built-in corpus,
// plus the diameter explorer. Every suite is deterministic for fixed inputs
// and reports per-case pass / fail / inconclusive / not-applicable statuses;
// a suite passes when no case fails. Inconclusive density verdicts are never
// coerced into pass or fail.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughstat/rough.hpp"

namespace roughstat {

enum class CaseStatus { Pass, Fail, Inconclusive, NotApplicable };

std::string to_string(CaseStatus status);

struct SuiteCase {
    std::string description;
    CaseStatus status = CaseStatus::Pass;
    std::string diagnostics;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;

    int count(CaseStatus status) const;
    bool ok() const { return count(CaseStatus::Fail) == 0; }
};

// Axis-aligned candidate region, one (min, max) per dimension.
struct Box {
    std::vector<std::pair<double, double>> axes;

    int dim() const { return static_cast<int>(axes.size()); }
};

GridSpec make_grid(const Box& box, double step);

struct CorpusEntry {
    std::string name;
    dsl::SequenceSpec spec;
    NormKind norm = NormKind::L2;
    std::string notes;
    // Known order-alpha statistical limit at alpha = 1, when one exists.
    std::optional<Point> stat_limit;
    Box box; // default candidate region for grid estimates
};

// EX_A, the cube/square indicators, constants, the alternating sequence,
// x_n = n, the noisy 2-D families and a 2-D constant.
std::vector<CorpusEntry> builtin_corpus();

// Corpus file: one `name = expr` per line, '#' comments, blank lines ignored.
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

struct SuiteBudget {
    index_t horizon = 1'000'000;
    double grid_step = 0.05;
    std::vector<double> eps_ladder{0.5, 0.1, 0.02};
    DensityThresholds thresholds{};
};

// Thm: statistically bounded of order alpha iff some r has a nonempty
// rough limit set.
SuiteReport check_boundedness_equivalence(const std::vector<CorpusEntry>& corpus,
                                          double alpha,
                                          const std::vector<double>& r_schedule,
                                          const SuiteBudget& budget = {});

// Closedness + convexity surrogate: accepted sets are contiguous in dim 1;
// midpoints of accepted pairs stay accepted in dim 2.
SuiteReport check_contiguity(const std::vector<CorpusEntry>& corpus,
                             const std::vector<double>& r_list, double alpha,
                             const SuiteBudget& budget = {});

// Decomposition: x rough-converges to xi iff x = y + (bounded-by-r part)
// with y statistically convergent to xi; forward via the radial projection,
// converse via a deterministic unit-direction perturbation.
SuiteReport check_decomposition(const std::vector<CorpusEntry>& corpus,
                                const std::vector<double>& r_list,
                                const std::vector<double>& alpha_list,
                                const SuiteBudget& budget = {});

// Every rough limit candidate sits within r of every cluster point.
SuiteReport check_cluster_distance(const std::vector<CorpusEntry>& corpus,
                                   const std::vector<double>& r_list, double alpha,
                                   double cluster_eps, const SuiteBudget& budget = {});

// In the strictly convex norm, an accepted pair at distance 2r forces
// statistical convergence to its midpoint.
SuiteReport check_midpoint_strict_convexity(const std::vector<CorpusEntry>& corpus,
                                            double r, double alpha,
                                            const SuiteBudget& budget = {});

// Scaling covariance (exact bad-set identity) and sum soundness.
SuiteReport check_linearity(const std::vector<CorpusEntry>& corpus,
                            const std::vector<double>& c_list, double r, double alpha,
                            const SuiteBudget& budget = {});

// Converges at order alpha implies Converges at any beta >= alpha.
SuiteReport check_order_monotonicity(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::pair<double, double>>& alpha_pairs,
                                     double r, const SuiteBudget& budget = {});

// Diameter exploration: reports diameter / 2r over the corpus and flags any
// ratio above 1 + uncertainty/r. Findings only; cases never fail.
SuiteReport explore_diameter(const std::vector<CorpusEntry>& corpus,
                             const std::vector<double>& r_list,
                             const std::vector<double>& alpha_list,
                             const SuiteBudget& budget = {});

// Canonical suite names and a dispatcher running each suite with its
// default parameters.
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                      const SuiteBudget& budget = {});

} // namespace roughstat
