#include "roughstat/rough.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "parallel.hpp"

namespace roughstat {

std::string to_string(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::Converges: return "Converges";
        case ConvergenceVerdict::Diverges: return "Diverges";
        case ConvergenceVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string to_string(BoundednessKind kind) {
    switch (kind) {
        case BoundednessKind::Bounded: return "Bounded";
        case BoundednessKind::NotDetected: return "NotDetected";
        case BoundednessKind::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

double GridSpec::max_step() const {
    double s = 0.0;
    for (const GridAxis& axis : axes) s = std::max(s, axis.step);
    return s;
}

void GridSpec::validate() const {
    if (axes.empty()) throw InvalidInput("grid: no axes");
    if (axes.size() > 2)
        throw UnsupportedDimension("grid: dimensions above 2 are not supported");
    for (const GridAxis& axis : axes) {
        if (!(axis.step > 0.0)) throw InvalidInput("grid: step must be positive");
        if (!(axis.min <= axis.max)) throw InvalidInput("grid: min must be <= max");
    }
}

namespace {

std::vector<double> axis_values(const GridAxis& axis) {
    auto count = static_cast<index_t>(
        std::floor((axis.max - axis.min) / axis.step + 1e-9));
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count) + 1);
    for (index_t i = 0; i <= count; ++i)
        values.push_back(axis.min + static_cast<double>(i) * axis.step);
    return values;
}

} // namespace

std::vector<Point> grid_points(const GridSpec& grid) {
    grid.validate();
    std::vector<Point> points;
    if (grid.dim() == 1) {
        for (double v : axis_values(grid.axes[0])) points.push_back(Point{{v}});
        return points;
    }
    std::vector<double> xs = axis_values(grid.axes[0]);
    std::vector<double> ys = axis_values(grid.axes[1]);
    points.reserve(xs.size() * ys.size());
    for (double y : ys)
        for (double x : xs) points.push_back(Point{{x, y}});
    return points;
}

std::size_t LimitSetEstimate::accepted_count() const {
    return static_cast<std::size_t>(std::count(accepted.begin(), accepted.end(), true));
}

// ----------------------------------------------------------- count kernel ---

namespace {

// counts[c][t][j] = |{k <= n_j : measure(x_k, cand_c) OP thresholds[t]}| with
// OP being >= (exceedance) or < (neighborhood hits). Candidates are processed
// in cache-friendly blocks; each block makes one pass over the table.
using Counts3 = std::vector<std::vector<std::vector<index_t>>>;

constexpr std::size_t kBlock = 16;

template <bool LESS>
inline index_t bump(double measure, double threshold) {
    if constexpr (LESS) return measure < threshold ? 1 : 0;
    else return measure >= threshold ? 1 : 0;
}

// DIM: 1 or 2. For dim-2 L2 the measure is the squared distance and the
// thresholds passed in are squared. Up to kGroup thresholds are fused into
// the distance loop so each accumulator lives in a register; longer
// threshold lists are handled in groups of kGroup scans.
constexpr std::size_t kGroup = 3;

template <int DIM, NormKind NORM, bool LESS, int NT>
void scan_fused(const SequenceTable& table, const Point& cand, const double* thr,
                std::size_t t_base, const Checkpoints& cps,
                std::vector<std::vector<index_t>>& out) {
    const double* xs = table.cols[0].data();
    const double* ys = DIM == 2 ? table.cols[1].data() : nullptr;
    const double cx = cand[0];
    const double cy = DIM == 2 ? cand[1] : 0.0;
    const double t0 = thr[0];
    const double t1 = NT >= 2 ? thr[1] : 0.0;
    const double t2 = NT >= 3 ? thr[2] : 0.0;

    index_t h0 = 0, h1 = 0, h2 = 0;
    index_t prev = 0;
    for (std::size_t j_cp = 0; j_cp < cps.size(); ++j_cp) {
        const index_t cp = cps.values[j_cp];
        for (index_t k = prev; k < cp; ++k) {
            double m;
            if constexpr (DIM == 1) {
                m = std::abs(xs[k] - cx);
            } else if constexpr (NORM == NormKind::L2) {
                const double dx = xs[k] - cx, dy = ys[k] - cy;
                m = dx * dx + dy * dy;
            } else if constexpr (NORM == NormKind::L1) {
                m = std::abs(xs[k] - cx) + std::abs(ys[k] - cy);
            } else {
                m = std::max(std::abs(xs[k] - cx), std::abs(ys[k] - cy));
            }
            h0 += bump<LESS>(m, t0);
            if constexpr (NT >= 2) h1 += bump<LESS>(m, t1);
            if constexpr (NT >= 3) h2 += bump<LESS>(m, t2);
        }
        out[t_base][j_cp] = h0;
        if constexpr (NT >= 2) out[t_base + 1][j_cp] = h1;
        if constexpr (NT >= 3) out[t_base + 2][j_cp] = h2;
        prev = cp;
    }
}

template <int DIM, NormKind NORM, bool LESS>
void scan_candidate_block(const SequenceTable& table, const std::vector<Point>& cands,
                          std::size_t c0, std::size_t c1,
                          const std::vector<double>& thresholds, const Checkpoints& cps,
                          Counts3& out) {
    for (std::size_t c = c0; c < c1; ++c) {
        for (std::size_t t = 0; t < thresholds.size(); t += kGroup) {
            const std::size_t group = std::min(kGroup, thresholds.size() - t);
            switch (group) {
                case 1:
                    scan_fused<DIM, NORM, LESS, 1>(table, cands[c], &thresholds[t], t, cps, out[c]);
                    break;
                case 2:
                    scan_fused<DIM, NORM, LESS, 2>(table, cands[c], &thresholds[t], t, cps, out[c]);
                    break;
                default:
                    scan_fused<DIM, NORM, LESS, 3>(table, cands[c], &thresholds[t], t, cps, out[c]);
                    break;
            }
        }
    }
}

// Generic any-dimension fallback.
template <bool LESS>
void scan_candidate_block_generic(const SequenceTable& table, const std::vector<Point>& cands,
                                  std::size_t c0, std::size_t c1,
                                  const std::vector<double>& thresholds, const Checkpoints& cps,
                                  NormKind norm, Counts3& out) {
    const std::size_t nc = c1 - c0;
    const std::size_t nt = thresholds.size();
    std::vector<index_t> counters(nc * nt, 0);
    std::size_t next_cp = 0;
    for (index_t k = 1; k <= cps.horizon(); ++k) {
        Point p = table.at(k);
        for (std::size_t i = 0; i < nc; ++i) {
            double m = distance(p, cands[c0 + i], norm);
            index_t* row = counters.data() + i * nt;
            for (std::size_t t = 0; t < nt; ++t) row[t] += bump<LESS>(m, thresholds[t]);
        }
        if (k == cps.values[next_cp]) {
            for (std::size_t i = 0; i < nc; ++i)
                for (std::size_t t = 0; t < nt; ++t)
                    out[c0 + i][t][next_cp] = counters[i * nt + t];
            ++next_cp;
        }
    }
}

Counts3 batch_counts(const SequenceTable& table, const std::vector<Point>& cands,
                     const std::vector<double>& thresholds, const Checkpoints& cps,
                     NormKind norm, bool less) {
    cps.validate();
    if (cps.horizon() > table.n)
        throw InvalidInput("count kernel: checkpoint horizon exceeds table length");
    for (const Point& c : cands)
        if (c.dim() != table.dim)
            throw InvalidInput("count kernel: candidate dimension mismatch");

    Counts3 out(cands.size(),
                std::vector<std::vector<index_t>>(
                    thresholds.size(), std::vector<index_t>(cps.size(), 0)));
    if (cands.empty()) return out;

    // Squared-distance comparison for the 2-D euclidean case.
    std::vector<double> effective = thresholds;
    const bool squared = table.dim == 2 && norm == NormKind::L2;
    if (squared)
        for (double& t : effective) t = t * t;

    const std::size_t blocks = (cands.size() + kBlock - 1) / kBlock;
    detail::parallel_for(blocks, [&](std::size_t b) {
        const std::size_t c0 = b * kBlock;
        const std::size_t c1 = std::min(cands.size(), c0 + kBlock);
        if (table.dim == 1) {
            if (less) scan_candidate_block<1, NormKind::L2, true>(table, cands, c0, c1, effective, cps, out);
            else scan_candidate_block<1, NormKind::L2, false>(table, cands, c0, c1, effective, cps, out);
        } else if (table.dim == 2) {
            switch (norm) {
                case NormKind::L1:
                    if (less) scan_candidate_block<2, NormKind::L1, true>(table, cands, c0, c1, effective, cps, out);
                    else scan_candidate_block<2, NormKind::L1, false>(table, cands, c0, c1, effective, cps, out);
                    break;
                case NormKind::L2:
                    if (less) scan_candidate_block<2, NormKind::L2, true>(table, cands, c0, c1, effective, cps, out);
                    else scan_candidate_block<2, NormKind::L2, false>(table, cands, c0, c1, effective, cps, out);
                    break;
                case NormKind::LInf:
                    if (less) scan_candidate_block<2, NormKind::LInf, true>(table, cands, c0, c1, effective, cps, out);
                    else scan_candidate_block<2, NormKind::LInf, false>(table, cands, c0, c1, effective, cps, out);
                    break;
            }
        } else {
            if (less) scan_candidate_block_generic<true>(table, cands, c0, c1, effective, cps, norm, out);
            else scan_candidate_block_generic<false>(table, cands, c0, c1, effective, cps, norm, out);
        }
    });
    return out;
}

std::vector<double> ratios_from_counts(const std::vector<index_t>& counts,
                                       const Checkpoints& cps, double alpha) {
    PrefixCounts pc;
    pc.checkpoints = cps;
    pc.counts = counts;
    return alpha_ratios(pc, alpha);
}

ConvergenceVerdict aggregate_verdict(
    const std::vector<std::pair<double, DensityVerdict>>& per_eps) {
    if (per_eps.back().second.verdict == Verdict::Zero)
        return ConvergenceVerdict::Converges;
    for (const auto& [eps, dv] : per_eps)
        if (dv.verdict == Verdict::NonZero) return ConvergenceVerdict::Diverges;
    return ConvergenceVerdict::Inconclusive;
}

ConvergenceReport report_from_counts(const Point& xi, const RoughParams& params,
                                     const std::vector<std::vector<index_t>>& counts_per_eps,
                                     const Checkpoints& cps, const DensityThresholds& th) {
    ConvergenceReport report;
    report.xi = xi;
    report.params = params;
    for (std::size_t t = 0; t < params.eps_ladder.size(); ++t) {
        auto ratios = ratios_from_counts(counts_per_eps[t], cps, params.alpha);
        report.per_eps.emplace_back(params.eps_ladder[t], decide_zero(ratios, cps, th));
    }
    report.verdict = aggregate_verdict(report.per_eps);
    return report;
}

std::vector<double> bad_set_thresholds(const RoughParams& params) {
    std::vector<double> thresholds;
    thresholds.reserve(params.eps_ladder.size());
    for (double eps : params.eps_ladder) thresholds.push_back(params.r + eps);
    return thresholds;
}

} // namespace

// ------------------------------------------------------------ operations ---

ConvergenceReport test_rough_convergence(const SequenceTable& x, const Point& xi,
                                         const RoughParams& params, const Checkpoints& cps,
                                         NormKind norm, const DensityThresholds& th) {
    params.validate();
    if (xi.dim() != x.dim)
        throw InvalidInput("test_rough_convergence: xi dimension mismatch");
    auto counts = batch_counts(x, {xi}, bad_set_thresholds(params), cps, norm, false);
    return report_from_counts(xi, params, counts[0], cps, th);
}

ConvergenceReport test_rough_convergence(const dsl::SequenceSpec& x, const Point& xi,
                                         const RoughParams& params, const Checkpoints& cps,
                                         NormKind norm, const DensityThresholds& th) {
    return test_rough_convergence(materialize(x, cps.horizon()), xi, params, cps, norm, th);
}

std::vector<LimitSetEstimate> estimate_limit_sets(const SequenceTable& x,
                                                  const std::vector<RoughParams>& params_list,
                                                  const Checkpoints& cps, NormKind norm,
                                                  const GridSpec& grid,
                                                  const DensityThresholds& th) {
    if (params_list.empty()) return {};
    grid.validate();
    if (grid.dim() != x.dim)
        throw InvalidInput("estimate_limit_set: grid dimension mismatch");

    // Deduplicated union of every bundle's bad-set thresholds.
    std::vector<double> thresholds;
    std::vector<std::vector<std::size_t>> slots(params_list.size());
    for (std::size_t p = 0; p < params_list.size(); ++p) {
        params_list[p].validate();
        for (double thr : bad_set_thresholds(params_list[p])) {
            std::size_t slot = 0;
            while (slot < thresholds.size() && thresholds[slot] != thr) ++slot;
            if (slot == thresholds.size()) thresholds.push_back(thr);
            slots[p].push_back(slot);
        }
    }

    auto grid_pts = grid_points(grid);
    auto counts = batch_counts(x, grid_pts, thresholds, cps, norm, false);

    std::vector<LimitSetEstimate> estimates;
    estimates.reserve(params_list.size());
    for (std::size_t p = 0; p < params_list.size(); ++p) {
        const RoughParams& params = params_list[p];
        LimitSetEstimate est;
        est.grid = grid_pts;
        est.uncertainty = grid.max_step() + params.eps_min();
        est.accepted.resize(est.grid.size());
        est.verdicts.resize(est.grid.size());
        for (std::size_t c = 0; c < est.grid.size(); ++c) {
            std::vector<std::vector<index_t>> per_eps_counts;
            per_eps_counts.reserve(slots[p].size());
            for (std::size_t slot : slots[p]) per_eps_counts.push_back(counts[c][slot]);
            auto report = report_from_counts(est.grid[c], params, per_eps_counts, cps, th);
            est.verdicts[c] = report.verdict;
            est.accepted[c] = report.verdict == ConvergenceVerdict::Converges;
        }

        std::vector<const Point*> accepted_points;
        for (std::size_t c = 0; c < est.grid.size(); ++c)
            if (est.accepted[c]) accepted_points.push_back(&est.grid[c]);

        if (!accepted_points.empty()) {
            Point lo = *accepted_points.front();
            Point hi = lo;
            for (const Point* pt : accepted_points) {
                for (int d = 0; d < x.dim; ++d) {
                    auto di = static_cast<std::size_t>(d);
                    lo.coords[di] = std::min(lo.coords[di], pt->coords[di]);
                    hi.coords[di] = std::max(hi.coords[di], pt->coords[di]);
                }
            }
            est.hull = std::make_pair(lo, hi);
            double diam = 0.0;
            for (std::size_t i = 0; i < accepted_points.size(); ++i)
                for (std::size_t j = i + 1; j < accepted_points.size(); ++j)
                    diam = std::max(diam,
                                    distance(*accepted_points[i], *accepted_points[j], norm));
            est.diameter = diam;
        }
        estimates.push_back(std::move(est));
    }
    return estimates;
}

LimitSetEstimate estimate_limit_set(const SequenceTable& x, const RoughParams& params,
                                    const Checkpoints& cps, NormKind norm,
                                    const GridSpec& grid, const DensityThresholds& th) {
    return estimate_limit_sets(x, {params}, cps, norm, grid, th).front();
}

LimitSetEstimate estimate_limit_set(const dsl::SequenceSpec& x, const RoughParams& params,
                                    const Checkpoints& cps, NormKind norm,
                                    const GridSpec& grid, const DensityThresholds& th) {
    return estimate_limit_set(materialize(x, cps.horizon()), params, cps, norm, grid, th);
}

// ------------------------------------------------- limsup/liminf oracles ---

namespace {

constexpr double kOracleResolution = 1e-3;

Verdict level_set_verdict(const SequenceTable& x, const Checkpoints& cps, double alpha,
                          const DensityThresholds& th, double cut, bool above) {
    const double* vs = x.cols[0].data();
    std::vector<index_t> counts;
    counts.reserve(cps.size());
    index_t count = 0;
    std::size_t next = 0;
    for (index_t k = 1; k <= cps.horizon(); ++k) {
        const double v = vs[k - 1];
        count += above ? (v > cut ? 1 : 0) : (v < cut ? 1 : 0);
        if (k == cps.values[next]) {
            counts.push_back(count);
            ++next;
        }
    }
    return decide_zero(ratios_from_counts(counts, cps, alpha), cps, th).verdict;
}

std::pair<double, double> value_range(const SequenceTable& x) {
    const auto& col = x.cols[0];
    auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    return {*lo, *hi};
}

} // namespace

double stat_limsup_alpha(const SequenceTable& x, double alpha, const Checkpoints& cps,
                         const DensityThresholds& th) {
    if (x.dim != 1) throw InvalidInput("stat_limsup_alpha: requires dim 1");
    cps.validate();
    if (cps.horizon() > x.n)
        throw InvalidInput("stat_limsup_alpha: horizon exceeds table length");
    auto [vmin, vmax] = value_range(x);
    // f(t) = verdict of |{k : x_k > t - res}|, monotone NonZero -> Zero in t.
    auto nonzero_at = [&](double t) {
        return level_set_verdict(x, cps, alpha, th, t - kOracleResolution, true) ==
               Verdict::NonZero;
    };
    double lo = vmin;
    double hi = vmax + 2.0 * kOracleResolution;
    if (!nonzero_at(lo))
        throw OracleInconclusive("stat_limsup_alpha: no NonZero verdict at range bottom");
    while (hi - lo > kOracleResolution) {
        double mid = 0.5 * (lo + hi);
        if (nonzero_at(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

double stat_liminf_alpha(const SequenceTable& x, double alpha, const Checkpoints& cps,
                         const DensityThresholds& th) {
    if (x.dim != 1) throw InvalidInput("stat_liminf_alpha: requires dim 1");
    cps.validate();
    if (cps.horizon() > x.n)
        throw InvalidInput("stat_liminf_alpha: horizon exceeds table length");
    auto [vmin, vmax] = value_range(x);
    auto nonzero_at = [&](double t) {
        return level_set_verdict(x, cps, alpha, th, t + kOracleResolution, false) ==
               Verdict::NonZero;
    };
    double lo = vmin - 2.0 * kOracleResolution;
    double hi = vmax;
    if (!nonzero_at(hi))
        throw OracleInconclusive("stat_liminf_alpha: no NonZero verdict at range top");
    while (hi - lo > kOracleResolution) {
        double mid = 0.5 * (lo + hi);
        if (nonzero_at(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

// --------------------------------------------------------------- clusters ---

ClusterEstimate estimate_cluster_points(const SequenceTable& x, double alpha, double eps,
                                        const Checkpoints& cps, NormKind norm,
                                        const GridSpec& grid, const DensityThresholds& th) {
    if (!(eps > 0.0)) throw InvalidInput("estimate_cluster_points: eps must be positive");
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw InvalidInput("estimate_cluster_points: alpha must be in (0, 1]");
    grid.validate();
    if (grid.dim() != x.dim)
        throw InvalidInput("estimate_cluster_points: grid dimension mismatch");

    ClusterEstimate est;
    est.eps = eps;
    est.grid = grid_points(grid);
    auto counts = batch_counts(x, est.grid, {eps}, cps, norm, /*less=*/true);
    est.positive.resize(est.grid.size());
    est.verdicts.resize(est.grid.size());
    for (std::size_t c = 0; c < est.grid.size(); ++c) {
        auto dv = decide_zero(ratios_from_counts(counts[c][0], cps, alpha), cps, th);
        est.verdicts[c] = dv.verdict;
        est.positive[c] = dv.verdict == Verdict::NonZero;
    }
    return est;
}

ClusterEstimate estimate_cluster_points(const dsl::SequenceSpec& x, double alpha, double eps,
                                        const Checkpoints& cps, NormKind norm,
                                        const GridSpec& grid, const DensityThresholds& th) {
    return estimate_cluster_points(materialize(x, cps.horizon()), alpha, eps, cps, norm,
                                   grid, th);
}

// ------------------------------------------------------------ boundedness ---

std::vector<double> default_m_schedule() {
    std::vector<double> schedule;
    for (int j = 0; j <= 20; ++j) schedule.push_back(static_cast<double>(1 << j));
    return schedule;
}

namespace {

double norm_at(const SequenceTable& x, index_t k, NormKind kind) {
    if (x.dim == 1) return std::abs(x.cols[0][static_cast<std::size_t>(k - 1)]);
    if (x.dim == 2) {
        double a = x.cols[0][static_cast<std::size_t>(k - 1)];
        double b = x.cols[1][static_cast<std::size_t>(k - 1)];
        switch (kind) {
            case NormKind::L1: return std::abs(a) + std::abs(b);
            case NormKind::L2: return std::hypot(a, b);
            case NormKind::LInf: return std::max(std::abs(a), std::abs(b));
        }
    }
    return norm(x.at(k), kind);
}

} // namespace

BoundednessResult is_statistically_bounded(const SequenceTable& x, double alpha,
                                           const Checkpoints& cps, NormKind norm,
                                           const std::vector<double>& m_schedule,
                                           const DensityThresholds& th) {
    if (m_schedule.empty())
        throw InvalidInput("is_statistically_bounded: empty M schedule");
    for (std::size_t i = 1; i < m_schedule.size(); ++i)
        if (!(m_schedule[i] > m_schedule[i - 1]))
            throw InvalidInput("is_statistically_bounded: M schedule must be increasing");

    Point origin;
    origin.coords.assign(static_cast<std::size_t>(x.dim), 0.0);
    auto counts = batch_counts(x, {origin}, m_schedule, cps, norm, false);

    // An empty exceedance set means M is above everything observed. That is
    // evidence only if the running max of ||x_k|| had stopped growing by the
    // horizon; otherwise (x_n = n and friends) the rung is untestable.
    const index_t horizon = cps.horizon();
    double first_half_max = 0.0, global_max = 0.0;
    for (index_t k = 1; k <= horizon; ++k) {
        double v = norm_at(x, k, norm);
        global_max = std::max(global_max, v);
        if (k <= horizon / 2) first_half_max = std::max(first_half_max, v);
    }
    const bool plateaued = global_max <= first_half_max;

    BoundednessResult result;
    bool any_inconclusive = false;
    bool any_tested = false;
    for (std::size_t t = 0; t < m_schedule.size(); ++t) {
        if (counts[0][t].back() == 0 && !plateaued) {
            result.untestable.push_back(m_schedule[t]);
            continue;
        }
        any_tested = true;
        auto dv = decide_zero(ratios_from_counts(counts[0][t], cps, alpha), cps, th);
        result.per_m.emplace_back(m_schedule[t], dv.verdict);
        if (dv.verdict == Verdict::Inconclusive) any_inconclusive = true;
        if (dv.verdict == Verdict::Zero && result.kind != BoundednessKind::Bounded) {
            result.kind = BoundednessKind::Bounded;
            result.bound = m_schedule[t];
        }
    }
    if (result.kind != BoundednessKind::Bounded)
        result.kind = (any_inconclusive || !any_tested)
                          ? BoundednessKind::Inconclusive
                          : BoundednessKind::NotDetected;
    return result;
}

BoundednessResult is_statistically_bounded(const dsl::SequenceSpec& x, double alpha,
                                           const Checkpoints& cps, NormKind norm,
                                           const std::vector<double>& m_schedule,
                                           const DensityThresholds& th) {
    return is_statistically_bounded(materialize(x, cps.horizon()), alpha, cps, norm,
                                    m_schedule, th);
}

// ------------------------------------------------------------- projection ---

namespace {

Point project_point(const Point& x, const Point& xi, double r, NormKind norm) {
    double d = distance(x, xi, norm);
    if (d <= r) return xi;
    double t = r / d;
    Point y;
    y.coords.reserve(x.coords.size());
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        y.coords.push_back(x.coords[i] + t * (xi.coords[i] - x.coords[i]));
    return y;
}

} // namespace

Sequence project_toward(const Sequence& x, const Point& xi, double r, NormKind norm) {
    if (!(r > 0.0)) throw InvalidInput("project_toward: r must be positive");
    if (xi.dim() != x.dim())
        throw InvalidInput("project_toward: xi dimension mismatch");
    return Sequence(x.dim(), [x, xi, r, norm](index_t k) {
        return project_point(x.at(k), xi, r, norm);
    });
}

Sequence project_toward(const dsl::SequenceSpec& x, const Point& xi, double r,
                        NormKind norm) {
    return project_toward(Sequence::from_spec(x), xi, r, norm);
}

SequenceTable project_toward(const SequenceTable& x, const Point& xi, double r,
                             NormKind norm) {
    if (!(r > 0.0)) throw InvalidInput("project_toward: r must be positive");
    if (xi.dim() != x.dim)
        throw InvalidInput("project_toward: xi dimension mismatch");
    SequenceTable y;
    y.dim = x.dim;
    y.n = x.n;
    y.cols.assign(static_cast<std::size_t>(x.dim),
                  std::vector<double>(static_cast<std::size_t>(x.n)));
    if (x.dim == 1) {
        const double c = xi[0];
        const double* src = x.cols[0].data();
        double* dst = y.cols[0].data();
        for (std::size_t i = 0; i < static_cast<std::size_t>(x.n); ++i) {
            double d = std::abs(src[i] - c);
            dst[i] = d <= r ? c : src[i] + (r / d) * (c - src[i]);
        }
        return y;
    }
    if (x.dim == 2) {
        const double cx = xi[0], cy = xi[1];
        const double* sx = x.cols[0].data();
        const double* sy = x.cols[1].data();
        double* dx = y.cols[0].data();
        double* dy = y.cols[1].data();
        for (std::size_t i = 0; i < static_cast<std::size_t>(x.n); ++i) {
            double ex = sx[i] - cx, ey = sy[i] - cy;
            double d;
            switch (norm) {
                case NormKind::L1: d = std::abs(ex) + std::abs(ey); break;
                case NormKind::L2: d = std::hypot(ex, ey); break;
                default: d = std::max(std::abs(ex), std::abs(ey)); break;
            }
            if (d <= r) {
                dx[i] = cx;
                dy[i] = cy;
            } else {
                double t = r / d;
                dx[i] = sx[i] + t * (cx - sx[i]);
                dy[i] = sy[i] + t * (cy - sy[i]);
            }
        }
        return y;
    }
    for (index_t k = 1; k <= x.n; ++k) {
        Point p = project_point(x.at(k), xi, r, norm);
        for (int d = 0; d < x.dim; ++d)
            y.cols[static_cast<std::size_t>(d)][static_cast<std::size_t>(k - 1)] = p[d];
    }
    return y;
}

std::pair<double, double> projection_residuals(const SequenceTable& x,
                                               const SequenceTable& y, const Point& xi,
                                               double r, NormKind kind) {
    if (x.dim != y.dim || x.n != y.n)
        throw InvalidInput("projection_residuals: table shape mismatch");
    if (xi.dim() != x.dim)
        throw InvalidInput("projection_residuals: xi dimension mismatch");
    double worst_radius = 0.0, worst_identity = 0.0;
    const int dim = x.dim;
    if (dim > 2) {
        for (index_t k = 1; k <= x.n; ++k) {
            double dxy = distance(x.at(k), y.at(k), kind);
            double dyxi = distance(y.at(k), xi, kind);
            double dxxi = distance(x.at(k), xi, kind);
            worst_radius = std::max(worst_radius, dxy - r);
            worst_identity =
                std::max(worst_identity, std::abs(dyxi - std::max(0.0, dxxi - r)));
        }
        return {std::max(worst_radius, 0.0), worst_identity};
    }
    auto measure = [kind, dim](double ax, double ay, double bx, double by) {
        if (dim == 1) return std::abs(ax - bx);
        double dx = ax - bx, dy = ay - by;
        switch (kind) {
            case NormKind::L1: return std::abs(dx) + std::abs(dy);
            case NormKind::L2: return std::hypot(dx, dy);
            case NormKind::LInf: return std::max(std::abs(dx), std::abs(dy));
        }
        return 0.0;
    };
    const double* xa = x.cols[0].data();
    const double* xb = dim == 2 ? x.cols[1].data() : nullptr;
    const double* ya = y.cols[0].data();
    const double* yb = dim == 2 ? y.cols[1].data() : nullptr;
    const double cx = xi[0];
    const double cy = dim == 2 ? xi[1] : 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(x.n); ++i) {
        double x2 = dim == 2 ? xb[i] : 0.0; // second coordinate of x_k
        double y2 = dim == 2 ? yb[i] : 0.0; // second coordinate of y_k
        double dxy = measure(xa[i], x2, ya[i], y2);
        double dyxi = measure(ya[i], y2, cx, cy);
        double dxxi = measure(xa[i], x2, cx, cy);
        worst_radius = std::max(worst_radius, dxy - r);
        worst_identity = std::max(worst_identity, std::abs(dyxi - std::max(0.0, dxxi - r)));
    }
    return {std::max(worst_radius, 0.0), worst_identity};
}

// -------------------------------------------------- AST-level composition ---

dsl::SequenceSpec scale_sequence(const dsl::SequenceSpec& x, double c) {
    dsl::SequenceSpec out;
    for (const auto& component : x.components)
        out.components.push_back(
            dsl::make_binary(dsl::BinOp::Mul, dsl::make_number(c), component));
    out.source_text = pretty_print(out);
    return out;
}

dsl::SequenceSpec sum_sequences(const dsl::SequenceSpec& x, const dsl::SequenceSpec& y) {
    if (x.dim() != y.dim())
        throw InvalidInput("sum_sequences: dimension mismatch (" +
                           std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
    dsl::SequenceSpec out;
    for (std::size_t i = 0; i < x.components.size(); ++i)
        out.components.push_back(
            dsl::make_binary(dsl::BinOp::Add, x.components[i], y.components[i]));
    out.source_text = pretty_print(out);
    return out;
}

namespace {

dsl::ExprPtr substitute_index(const dsl::ExprPtr& e, const dsl::ExprPtr& replacement) {
    using dsl::Expr;
    if (e->kind == Expr::Kind::Index) return replacement;
    if (e->children.empty()) return e;
    auto copy = std::make_shared<Expr>(*e);
    for (auto& child : copy->children) child = substitute_index(child, replacement);
    return copy;
}

} // namespace

dsl::SequenceSpec restrict_to_ap(const dsl::SequenceSpec& x, index_t a, index_t b) {
    if (a < 1) throw InvalidInput("restrict_to_ap: stride a must be >= 1");
    if (b < 0) throw InvalidInput("restrict_to_ap: offset b must be >= 0");
    if (a == 1 && b == 0) return x;
    // n -> a*n + b
    dsl::ExprPtr replacement = dsl::make_binary(
        dsl::BinOp::Add,
        dsl::make_binary(dsl::BinOp::Mul, dsl::make_number(static_cast<double>(a)),
                         dsl::make_index()),
        dsl::make_number(static_cast<double>(b)));
    dsl::SequenceSpec out;
    for (const auto& component : x.components)
        out.components.push_back(substitute_index(component, replacement));
    out.source_text = pretty_print(out);
    return out;
}

} // namespace roughstat
