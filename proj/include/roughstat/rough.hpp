#pragma once

// Rough statistical convergence of order alpha: candidate testing, limit-set
// and cluster-point estimation on grids, statistical boundedness, the radial
// projection construction, and AST-level linear operations on sequences.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roughstat/core.hpp"
#include "roughstat/density.hpp"
#include "roughstat/seqdsl.hpp"
#include "roughstat/sequence_table.hpp"

namespace roughstat {

enum class ConvergenceVerdict { Converges, Diverges, Inconclusive };

std::string to_string(ConvergenceVerdict v);

// Full diagnostics for one (x, xi, r, alpha) test across the eps ladder.
// The smallest eps is the binding constraint: its bad set contains every
// other rung's bad set, so its verdict decides Converges.
struct ConvergenceReport {
    Point xi;
    RoughParams params;
    std::vector<std::pair<double, DensityVerdict>> per_eps; // ladder order
    ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
};

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;
};

struct GridSpec {
    std::vector<GridAxis> axes; // one per dimension, dim <= 2

    int dim() const { return static_cast<int>(axes.size()); }
    double max_step() const;
    void validate() const;
};

// Candidates in canonical order: axis 0 fastest.
std::vector<Point> grid_points(const GridSpec& grid);

struct LimitSetEstimate {
    std::vector<Point> grid;
    std::vector<bool> accepted;
    std::vector<ConvergenceVerdict> verdicts;
    std::optional<std::pair<Point, Point>> hull; // axis-aligned min/max corners
    double diameter = 0.0;      // max pairwise distance among accepted
    double uncertainty = 0.0;   // grid step + smallest eps

    std::size_t accepted_count() const;
};

struct ClusterEstimate {
    std::vector<Point> grid;
    std::vector<bool> positive;
    std::vector<Verdict> verdicts;
    double eps = 0.0;
};

enum class BoundednessKind { Bounded, NotDetected, Inconclusive };

struct BoundednessResult {
    BoundednessKind kind = BoundednessKind::Inconclusive;
    double bound = 0.0; // first M with a Zero exceedance verdict, when Bounded
    std::vector<std::pair<double, Verdict>> per_m; // tested rungs only
    // Rungs whose exceedance set was empty while the running max of ||x_k||
    // was still growing at the horizon: no evidence either way at this N.
    std::vector<double> untestable;
};

std::string to_string(BoundednessKind kind);

// ------------------------------------------------------------ operations ---

ConvergenceReport test_rough_convergence(const SequenceTable& x, const Point& xi,
                                         const RoughParams& params, const Checkpoints& cps,
                                         NormKind norm, const DensityThresholds& th = {});
ConvergenceReport test_rough_convergence(const dsl::SequenceSpec& x, const Point& xi,
                                         const RoughParams& params, const Checkpoints& cps,
                                         NormKind norm, const DensityThresholds& th = {});

// Tests every grid candidate; accepted iff its report verdict is Converges.
LimitSetEstimate estimate_limit_set(const SequenceTable& x, const RoughParams& params,
                                    const Checkpoints& cps, NormKind norm,
                                    const GridSpec& grid, const DensityThresholds& th = {});
LimitSetEstimate estimate_limit_set(const dsl::SequenceSpec& x, const RoughParams& params,
                                    const Checkpoints& cps, NormKind norm,
                                    const GridSpec& grid, const DensityThresholds& th = {});

// Batched variant: exceedance counts depend on r and eps but not on alpha,
// so parameter bundles sharing a threshold list reuse one table scan.
std::vector<LimitSetEstimate> estimate_limit_sets(const SequenceTable& x,
                                                  const std::vector<RoughParams>& params_list,
                                                  const Checkpoints& cps, NormKind norm,
                                                  const GridSpec& grid,
                                                  const DensityThresholds& th = {});

// 1-D order-alpha statistical limsup/liminf by bisection at resolution 1e-3.
// Throws OracleInconclusive when no NonZero verdict brackets the search.
double stat_limsup_alpha(const SequenceTable& x, double alpha, const Checkpoints& cps,
                         const DensityThresholds& th = {});
double stat_liminf_alpha(const SequenceTable& x, double alpha, const Checkpoints& cps,
                         const DensityThresholds& th = {});

// A candidate is positive when the count of eps-neighborhood hits has a
// NonZero alpha-order verdict.
ClusterEstimate estimate_cluster_points(const SequenceTable& x, double alpha, double eps,
                                        const Checkpoints& cps, NormKind norm,
                                        const GridSpec& grid, const DensityThresholds& th = {});
ClusterEstimate estimate_cluster_points(const dsl::SequenceSpec& x, double alpha, double eps,
                                        const Checkpoints& cps, NormKind norm,
                                        const GridSpec& grid, const DensityThresholds& th = {});

std::vector<double> default_m_schedule(); // 1, 2, 4, ..., 2^20

BoundednessResult is_statistically_bounded(const SequenceTable& x, double alpha,
                                           const Checkpoints& cps, NormKind norm,
                                           const std::vector<double>& m_schedule = default_m_schedule(),
                                           const DensityThresholds& th = {});
BoundednessResult is_statistically_bounded(const dsl::SequenceSpec& x, double alpha,
                                           const Checkpoints& cps, NormKind norm,
                                           const std::vector<double>& m_schedule = default_m_schedule(),
                                           const DensityThresholds& th = {});

// y_k = xi when ||x_k - xi|| <= r, else the point r closer to xi along the
// ray from x_k; guarantees ||x_k - y_k|| <= r and
// ||y_k - xi|| = max(0, ||x_k - xi|| - r).
Sequence project_toward(const Sequence& x, const Point& xi, double r,
                        NormKind norm = NormKind::L2);
Sequence project_toward(const dsl::SequenceSpec& x, const Point& xi, double r,
                        NormKind norm = NormKind::L2);
SequenceTable project_toward(const SequenceTable& x, const Point& xi, double r,
                             NormKind norm = NormKind::L2);

// Worst-case contract residuals over the table prefix:
// first = max(||x_k - y_k|| - r, 0), second = max deviation of ||y_k - xi||
// from max(0, ||x_k - xi|| - r).
std::pair<double, double> projection_residuals(const SequenceTable& x,
                                               const SequenceTable& y, const Point& xi,
                                               double r, NormKind norm);

// AST-level composition.
dsl::SequenceSpec scale_sequence(const dsl::SequenceSpec& x, double c);
dsl::SequenceSpec sum_sequences(const dsl::SequenceSpec& x, const dsl::SequenceSpec& y);

// Arithmetic-progression subsequence x'_j = x_{a*j + b}.
dsl::SequenceSpec restrict_to_ap(const dsl::SequenceSpec& x, index_t a, index_t b);

} // namespace roughstat
