#include "roughstat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace roughstat {

std::string to_string(CaseStatus status) {
    switch (status) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::Inconclusive: return "inconclusive";
        case CaseStatus::NotApplicable: return "not-applicable";
    }
    return "inconclusive";
}

int SuiteReport::count(CaseStatus status) const {
    return static_cast<int>(
        std::count_if(cases.begin(), cases.end(),
                      [status](const SuiteCase& c) { return c.status == status; }));
}

GridSpec make_grid(const Box& box, double step) {
    GridSpec grid;
    for (const auto& [lo, hi] : box.axes) grid.axes.push_back({lo, hi, step});
    return grid;
}

// ---------------------------------------------------------------- corpus ---

namespace {

Box box1(double lo, double hi) { return Box{{{lo, hi}}}; }
Box box2(double lx, double hx, double ly, double hy) { return Box{{{lx, hx}, {ly, hy}}}; }

CorpusEntry entry(std::string name, const std::string& builtin_name, NormKind norm,
                  std::string notes, std::optional<Point> stat_limit, Box box) {
    CorpusEntry e;
    e.name = std::move(name);
    e.spec = dsl::builtin(builtin_name);
    e.norm = norm;
    e.notes = std::move(notes);
    e.stat_limit = std::move(stat_limit);
    e.box = std::move(box);
    return e;
}

} // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> corpus;
    corpus.push_back(entry("EX_A", "EX_A", NormKind::L2,
                           "alternating +-1 with unbounded excursions on the squares",
                           std::nullopt, box1(-4, 4)));
    corpus.push_back(entry("CUBE_INDICATOR", "CUBE_INDICATOR", NormKind::L2,
                           "indicator of the perfect cubes; order threshold 1/3",
                           Point{{0.0}}, box1(-4, 4)));
    corpus.push_back(entry("SQUARE_INDICATOR", "SQUARE_INDICATOR", NormKind::L2,
                           "indicator of the perfect squares; order threshold 1/2",
                           Point{{0.0}}, box1(-4, 4)));
    corpus.push_back(entry("CONST_0", "CONST:0", NormKind::L2, "constant zero",
                           Point{{0.0}}, box1(-4, 4)));
    corpus.push_back(entry("CONST_2P5", "CONST:2.5", NormKind::L2, "constant 2.5",
                           Point{{2.5}}, box1(-4, 4)));
    corpus.push_back(entry("ALT", "ALT:-1,1", NormKind::L2, "plain (-1)^k alternation",
                           std::nullopt, box1(-4, 4)));
    corpus.push_back(entry("LINEAR", "LINEAR", NormKind::L2, "x_k = k, unbounded",
                           std::nullopt, box1(-4, 4)));
    corpus.push_back(entry("NOISY2D_ORIGIN", "NOISY2D:0,0", NormKind::L2,
                           "1/k noise around the origin, excursions on squares",
                           Point{{0.0, 0.0}}, box2(-2, 2, -2, 2)));
    corpus.push_back(entry("NOISY2D_SHIFT", "NOISY2D:2,-1", NormKind::L2,
                           "1/k noise around (2, -1), excursions on squares",
                           Point{{2.0, -1.0}}, box2(0, 4, -3, 1)));
    corpus.push_back(entry("NOISY2D_LINF", "NOISY2D:0,0", NormKind::LInf,
                           "noisy origin family under the max norm",
                           Point{{0.0, 0.0}}, box2(-2, 2, -2, 2)));
    corpus.push_back(entry("CONST2D_0", "CONST:0,0", NormKind::L2, "constant origin in R^2",
                           Point{{0.0, 0.0}}, box2(-2, 2, -2, 2)));
    return corpus;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open corpus file: " + path);
    std::vector<CorpusEntry> corpus;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto not_space = [](unsigned char c) { return !std::isspace(c); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), not_space));
        line.erase(std::find_if(line.rbegin(), line.rend(), not_space).base(), line.end());
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidInput("corpus line " + std::to_string(lineno) +
                               ": expected `name = expr`");
        std::string name = line.substr(0, eq);
        name.erase(std::find_if(name.rbegin(), name.rend(), not_space).base(), name.end());
        std::string text = line.substr(eq + 1);
        text.erase(text.begin(), std::find_if(text.begin(), text.end(), not_space));
        for (const CorpusEntry& existing : corpus)
            if (existing.name == name)
                throw InvalidInput("corpus line " + std::to_string(lineno) +
                                   ": duplicate name " + name);
        CorpusEntry e;
        e.name = std::move(name);
        e.spec = dsl::sequence_from_text_or_builtin(text);
        e.norm = NormKind::L2;
        e.box = e.spec.dim() == 1 ? box1(-4, 4) : box2(-2, 2, -2, 2);
        corpus.push_back(std::move(e));
    }
    return corpus;
}

// ----------------------------------------------------------- suite plumbing ---

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string fmt(const Point& p) {
    std::string out = "(";
    for (int d = 0; d < p.dim(); ++d) {
        if (d) out += ", ";
        out += fmt(p[d]);
    }
    return out + ")";
}

RoughParams make_params(double r, double alpha, const SuiteBudget& budget) {
    RoughParams p;
    p.r = r;
    p.alpha = alpha;
    p.eps_ladder = budget.eps_ladder;
    return p;
}

struct PreparedEntry {
    const CorpusEntry* entry;
    SequenceTable table;
    GridSpec grid;
};

std::vector<PreparedEntry> prepare(const std::vector<CorpusEntry>& corpus,
                                   const SuiteBudget& budget) {
    std::vector<PreparedEntry> prepared;
    prepared.reserve(corpus.size());
    for (const CorpusEntry& e : corpus)
        prepared.push_back({&e, materialize(e.spec, budget.horizon),
                            make_grid(e.box, budget.grid_step)});
    return prepared;
}

Point probe_point(const CorpusEntry& e) {
    if (e.stat_limit) return *e.stat_limit;
    Point p;
    p.coords.assign(static_cast<std::size_t>(e.spec.dim()), 0.0);
    return p;
}

CaseStatus status_from(ConvergenceVerdict v, ConvergenceVerdict want) {
    if (v == want) return CaseStatus::Pass;
    if (v == ConvergenceVerdict::Inconclusive) return CaseStatus::Inconclusive;
    return CaseStatus::Fail;
}

// Evenly sampled positions of set bits, capped at `cap`.
std::vector<std::size_t> sample_accepted(const std::vector<bool>& accepted, std::size_t cap) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < accepted.size(); ++i)
        if (accepted[i]) idx.push_back(i);
    if (idx.size() <= cap) return idx;
    std::vector<std::size_t> sampled;
    sampled.reserve(cap);
    for (std::size_t s = 0; s < cap; ++s)
        sampled.push_back(idx[s * idx.size() / cap]);
    return sampled;
}

// Deterministic unit directions alternating sign per axis.
Point unit_direction(index_t k, int dim, NormKind norm) {
    Point u;
    if (dim == 1) {
        u.coords = {k % 2 == 0 ? 1.0 : -1.0};
        return u;
    }
    u.coords.resize(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d)
        u.coords[static_cast<std::size_t>(d)] = ((k >> d) % 2 == 0) ? 1.0 : -1.0;
    double scale = 1.0 / roughstat::norm(u, norm);
    for (double& c : u.coords) c *= scale;
    return u;
}

} // namespace

// ------------------------------------------------- boundedness equivalence ---

SuiteReport check_boundedness_equivalence(const std::vector<CorpusEntry>& corpus,
                                          double alpha,
                                          const std::vector<double>& r_schedule,
                                          const SuiteBudget& budget) {
    for (std::size_t i = 1; i < r_schedule.size(); ++i)
        if (!(r_schedule[i] > r_schedule[i - 1]))
            throw InvalidInput("check_boundedness_equivalence: r schedule must increase");

    SuiteReport report;
    report.suite = "boundedness";
    auto cps = default_checkpoints(budget.horizon);
    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        auto bres = is_statistically_bounded(pe.table, alpha, cps, e.norm,
                                             default_m_schedule(), budget.thresholds);
        SuiteCase c;
        std::ostringstream desc;
        desc << e.name << ": " << to_string(bres.kind);
        if (bres.kind == BoundednessKind::Bounded) desc << "(M=" << fmt(bres.bound) << ")";

        if (bres.kind == BoundednessKind::Inconclusive) {
            c.status = CaseStatus::Inconclusive;
            c.diagnostics = "boundedness scan inconclusive";
        } else if (bres.kind == BoundednessKind::Bounded) {
            // Some r in the schedule must produce a nonempty limit set.
            bool found = false;
            for (double r : r_schedule) {
                auto est = estimate_limit_set(pe.table, make_params(r, alpha, budget), cps,
                                              e.norm, pe.grid, budget.thresholds);
                if (est.accepted_count() > 0) {
                    desc << "; nonempty limit set at r=" << fmt(r);
                    found = true;
                    break;
                }
            }
            c.status = found ? CaseStatus::Pass : CaseStatus::Fail;
            if (!found)
                c.diagnostics = "bounded but every r in the schedule gave an empty set";
        } else {
            // NotDetected: every r must give an empty set.
            bool all_empty = true;
            for (double r : r_schedule) {
                auto est = estimate_limit_set(pe.table, make_params(r, alpha, budget), cps,
                                              e.norm, pe.grid, budget.thresholds);
                if (est.accepted_count() > 0) {
                    all_empty = false;
                    c.diagnostics = "unbounded verdict but nonempty set at r=" + fmt(r);
                    break;
                }
            }
            desc << "; empty limit sets up to r=" << fmt(r_schedule.back());
            c.status = all_empty ? CaseStatus::Pass : CaseStatus::Fail;
        }
        c.description = desc.str();
        report.cases.push_back(std::move(c));
    }
    return report;
}

// ---------------------------------------------------------------- contiguity ---

namespace {

// Counts of grid values per axis, matching grid_points order (axis 0 fastest).
std::vector<std::size_t> axis_counts(const GridSpec& grid) {
    std::vector<std::size_t> counts;
    for (const GridAxis& axis : grid.axes)
        counts.push_back(static_cast<std::size_t>(
                             std::floor((axis.max - axis.min) / axis.step + 1e-9)) + 1);
    return counts;
}

// Nearest grid indices bracketing a coordinate; at most two per axis.
std::vector<std::size_t> bracketing(double value, const GridAxis& axis, std::size_t n) {
    double f = (value - axis.min) / axis.step;
    auto lo = static_cast<long long>(std::floor(f + 1e-9));
    auto hi = static_cast<long long>(std::ceil(f - 1e-9));
    std::vector<std::size_t> out;
    for (long long i : {lo, hi}) {
        if (i < 0 || i >= static_cast<long long>(n)) continue;
        if (out.empty() || out.back() != static_cast<std::size_t>(i))
            out.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

// Dim-2 midpoint closure: for any two accepted candidates, some grid point
// nearest their exact midpoint must be accepted.
bool midpoints_accepted(const LimitSetEstimate& est, const GridSpec& grid,
                        std::string& diag) {
    auto counts = axis_counts(grid);
    const std::size_t nx = counts[0];
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < est.accepted.size(); ++i)
        if (est.accepted[i]) idx.push_back(i);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const Point& p = est.grid[idx[a]];
            const Point& q = est.grid[idx[b]];
            double mx = 0.5 * (p[0] + q[0]);
            double my = 0.5 * (p[1] + q[1]);
            bool ok = false;
            for (std::size_t ix : bracketing(mx, grid.axes[0], counts[0])) {
                for (std::size_t iy : bracketing(my, grid.axes[1], counts[1])) {
                    if (est.accepted[iy * nx + ix]) { ok = true; break; }
                }
                if (ok) break;
            }
            if (!ok) {
                diag = "midpoint of " + fmt(p) + " and " + fmt(q) + " rejected";
                return false;
            }
        }
    }
    return true;
}

bool run_contiguous(const LimitSetEstimate& est, std::string& diag) {
    std::size_t first = est.accepted.size(), last = 0, count = 0;
    for (std::size_t i = 0; i < est.accepted.size(); ++i) {
        if (!est.accepted[i]) continue;
        first = std::min(first, i);
        last = i;
        ++count;
    }
    if (count == last - first + 1) return true;
    diag = "accepted set has gaps: " + std::to_string(count) + " accepted across [" +
           std::to_string(first) + ", " + std::to_string(last) + "]";
    return false;
}

} // namespace

SuiteReport check_contiguity(const std::vector<CorpusEntry>& corpus,
                             const std::vector<double>& r_list, double alpha,
                             const SuiteBudget& budget) {
    SuiteReport report;
    report.suite = "contiguity";
    auto cps = default_checkpoints(budget.horizon);
    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        std::vector<RoughParams> params_list;
        for (double r : r_list) params_list.push_back(make_params(r, alpha, budget));
        auto estimates = estimate_limit_sets(pe.table, params_list, cps, e.norm, pe.grid,
                                             budget.thresholds);
        for (std::size_t i = 0; i < r_list.size(); ++i) {
            const auto& est = estimates[i];
            SuiteCase c;
            std::ostringstream desc;
            desc << e.name << ", r=" << fmt(r_list[i]) << ", alpha=" << fmt(alpha);
            if (est.accepted_count() == 0) {
                desc << ": empty accepted set (vacuous)";
                c.status = CaseStatus::Pass;
            } else if (e.spec.dim() == 1) {
                std::string diag;
                bool ok = run_contiguous(est, diag);
                desc << ": run of " << est.accepted_count() << " candidates, hull ["
                     << fmt(est.hull->first[0]) << ", " << fmt(est.hull->second[0]) << "]";
                c.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
                c.diagnostics = diag;
            } else {
                std::string diag;
                bool ok = midpoints_accepted(est, pe.grid, diag);
                desc << ": " << est.accepted_count() << " candidates, midpoint closure";
                c.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
                c.diagnostics = diag;
            }
            c.description = desc.str();
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

// -------------------------------------------------------------- decomposition ---

SuiteReport check_decomposition(const std::vector<CorpusEntry>& corpus,
                                const std::vector<double>& r_list,
                                const std::vector<double>& alpha_list,
                                const SuiteBudget& budget) {
    constexpr std::size_t kMaxCandidates = 24;
    SuiteReport report;
    report.suite = "decomposition";
    auto cps = default_checkpoints(budget.horizon);
    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;

        std::vector<RoughParams> params_list;
        for (double r : r_list)
            for (double alpha : alpha_list) params_list.push_back(make_params(r, alpha, budget));
        auto estimates = estimate_limit_sets(pe.table, params_list, cps, e.norm, pe.grid,
                                             budget.thresholds);

        // Forward: every accepted xi decomposes through the radial projection.
        for (std::size_t pi = 0; pi < params_list.size(); ++pi) {
            const RoughParams& params = params_list[pi];
            if (!(params.r > 0.0)) continue;
            const auto& est = estimates[pi];
            SuiteCase c;
            std::ostringstream desc;
            desc << e.name << " forward, r=" << fmt(params.r)
                 << ", alpha=" << fmt(params.alpha);
            auto picked = sample_accepted(est.accepted, kMaxCandidates);
            if (picked.empty()) {
                desc << ": empty accepted set (vacuous)";
                c.status = CaseStatus::Pass;
            } else {
                double worst_radius = 0.0, worst_identity = 0.0;
                CaseStatus status = CaseStatus::Pass;
                std::string diag;
                RoughParams zero_params = make_params(0.0, params.alpha, budget);
                for (std::size_t ci : picked) {
                    const Point& xi = est.grid[ci];
                    auto y = project_toward(pe.table, xi, params.r, e.norm);
                    auto [res_radius, res_identity] =
                        projection_residuals(pe.table, y, xi, params.r, e.norm);
                    worst_radius = std::max(worst_radius, res_radius);
                    worst_identity = std::max(worst_identity, res_identity);
                    auto rep = test_rough_convergence(y, xi, zero_params, cps, e.norm,
                                                      budget.thresholds);
                    if (rep.verdict != ConvergenceVerdict::Converges) {
                        auto s = status_from(rep.verdict, ConvergenceVerdict::Converges);
                        if (s == CaseStatus::Fail) {
                            status = CaseStatus::Fail;
                            diag = "projected sequence does not st-converge to " + fmt(xi);
                            break;
                        }
                        status = CaseStatus::Inconclusive;
                        diag = "r=0 verdict inconclusive at " + fmt(xi);
                    }
                }
                if (worst_radius > 1e-9 || worst_identity > 1e-9) {
                    status = CaseStatus::Fail;
                    diag = "projection contract residuals exceed 1e-9";
                }
                desc << ": " << picked.size() << " candidates, residuals ("
                     << fmt(worst_radius) << ", " << fmt(worst_identity) << ")";
                c.status = status;
                c.diagnostics = diag;
            }
            c.description = desc.str();
            report.cases.push_back(std::move(c));
        }

        // Converse: perturb a statistically convergent y by r along unit
        // directions; the result must rough-converge back to the limit.
        for (double alpha : alpha_list) {
            if (!e.stat_limit) continue;
            const Point xi = *e.stat_limit;
            RoughParams zero_params = make_params(0.0, alpha, budget);
            auto base = test_rough_convergence(pe.table, xi, zero_params, cps, e.norm,
                                               budget.thresholds);
            for (double r : r_list) {
                if (!(r > 0.0)) continue;
                SuiteCase c;
                std::ostringstream desc;
                desc << e.name << " converse, r=" << fmt(r) << ", alpha=" << fmt(alpha);
                if (base.verdict != ConvergenceVerdict::Converges) {
                    desc << ": not statistically convergent at this alpha (vacuous)";
                    c.status = CaseStatus::NotApplicable;
                } else {
                    SequenceTable perturbed = pe.table;
                    for (index_t k = 1; k <= perturbed.n; ++k) {
                        Point u = unit_direction(k, perturbed.dim, e.norm);
                        for (int d = 0; d < perturbed.dim; ++d)
                            perturbed.cols[static_cast<std::size_t>(d)]
                                          [static_cast<std::size_t>(k - 1)] += r * u[d];
                    }
                    auto rep = test_rough_convergence(perturbed, xi,
                                                      make_params(r, alpha, budget), cps,
                                                      e.norm, budget.thresholds);
                    desc << ": perturbed sequence verdict " << to_string(rep.verdict);
                    c.status = status_from(rep.verdict, ConvergenceVerdict::Converges);
                }
                c.description = desc.str();
                report.cases.push_back(std::move(c));
            }
        }
    }
    return report;
}

// ------------------------------------------------------------ cluster distance ---

SuiteReport check_cluster_distance(const std::vector<CorpusEntry>& corpus,
                                   const std::vector<double>& r_list, double alpha,
                                   double cluster_eps, const SuiteBudget& budget) {
    SuiteReport report;
    report.suite = "cluster";
    auto cps = default_checkpoints(budget.horizon);
    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        auto clusters = estimate_cluster_points(pe.table, alpha, cluster_eps, cps, e.norm,
                                                pe.grid, budget.thresholds);
        std::vector<const Point*> positives;
        for (std::size_t i = 0; i < clusters.grid.size(); ++i)
            if (clusters.positive[i]) positives.push_back(&clusters.grid[i]);

        std::vector<RoughParams> params_list;
        for (double r : r_list) params_list.push_back(make_params(r, alpha, budget));
        auto estimates = estimate_limit_sets(pe.table, params_list, cps, e.norm, pe.grid,
                                             budget.thresholds);

        for (std::size_t i = 0; i < r_list.size(); ++i) {
            double r = r_list[i];
            const auto& est = estimates[i];
            SuiteCase c;
            std::ostringstream desc;
            desc << e.name << ", r=" << fmt(r) << ": " << positives.size()
                 << " cluster candidates, " << est.accepted_count() << " limit candidates";
            if (positives.empty() || est.accepted_count() == 0) {
                desc << " (vacuous)";
                c.status = CaseStatus::Pass;
            } else {
                double max_dist = 0.0;
                for (std::size_t gi = 0; gi < est.grid.size(); ++gi) {
                    if (!est.accepted[gi]) continue;
                    for (const Point* cp : positives)
                        max_dist = std::max(max_dist, distance(est.grid[gi], *cp, e.norm));
                }
                double tol = est.uncertainty + cluster_eps;
                desc << ", max distance " << fmt(max_dist) << " vs r+tol "
                     << fmt(r + tol);
                c.status = max_dist <= r + tol ? CaseStatus::Pass : CaseStatus::Fail;
                if (c.status == CaseStatus::Fail)
                    c.diagnostics = "a limit candidate sits farther than r from a cluster point";
            }
            c.description = desc.str();
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

// --------------------------------------------------- midpoint strict convexity ---

SuiteReport check_midpoint_strict_convexity(const std::vector<CorpusEntry>& corpus,
                                            double r, double alpha,
                                            const SuiteBudget& budget) {
    SuiteReport report;
    report.suite = "midpoint";
    auto cps = default_checkpoints(budget.horizon);
    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        if (e.spec.dim() != 2 || !e.stat_limit) continue;
        SuiteCase c;
        std::ostringstream desc;
        desc << e.name << ", r=" << fmt(r) << ", alpha=" << fmt(alpha) << ", "
             << to_string(e.norm) << " norm";
        if (!strictly_convex(e.norm)) {
            desc << ": norm not strictly convex";
            c.status = CaseStatus::NotApplicable;
            c.description = desc.str();
            report.cases.push_back(std::move(c));
            continue;
        }
        auto est = estimate_limit_set(pe.table, make_params(r, alpha, budget), cps, e.norm,
                                      pe.grid, budget.thresholds);
        std::vector<const Point*> accepted;
        for (std::size_t i = 0; i < est.grid.size(); ++i)
            if (est.accepted[i]) accepted.push_back(&est.grid[i]);
        if (accepted.size() < 2) {
            desc << ": fewer than two accepted candidates";
            c.status = CaseStatus::Inconclusive;
            c.description = desc.str();
            report.cases.push_back(std::move(c));
            continue;
        }
        const Point* y1 = nullptr;
        const Point* y2 = nullptr;
        double best = -1.0;
        for (std::size_t i = 0; i < accepted.size(); ++i) {
            for (std::size_t j = i + 1; j < accepted.size(); ++j) {
                double d = distance(*accepted[i], *accepted[j], e.norm);
                if (d > best) {
                    best = d;
                    y1 = accepted[i];
                    y2 = accepted[j];
                }
            }
        }
        if (best < 2.0 * r - 2.0 * est.uncertainty) {
            desc << ": no pair near diameter 2r (best " << fmt(best) << ")";
            c.status = CaseStatus::Inconclusive;
            c.description = desc.str();
            report.cases.push_back(std::move(c));
            continue;
        }
        Point mid{{0.5 * ((*y1)[0] + (*y2)[0]), 0.5 * ((*y1)[1] + (*y2)[1])}};
        auto rep = test_rough_convergence(pe.table, mid, make_params(0.0, alpha, budget),
                                          cps, e.norm, budget.thresholds);
        double off_center = distance(mid, *e.stat_limit, e.norm);
        desc << ": pair distance " << fmt(best) << ", midpoint " << fmt(mid)
             << ", offset " << fmt(off_center) << ", r=0 verdict "
             << to_string(rep.verdict);
        c.status = status_from(rep.verdict, ConvergenceVerdict::Converges);
        if (off_center > est.uncertainty) {
            c.status = CaseStatus::Fail;
            c.diagnostics = "midpoint farther than the uncertainty from the centre";
        }
        c.description = desc.str();
        report.cases.push_back(std::move(c));
    }
    return report;
}

// ------------------------------------------------------------------ linearity ---

SuiteReport check_linearity(const std::vector<CorpusEntry>& corpus,
                            const std::vector<double>& c_list, double r, double alpha,
                            const SuiteBudget& budget) {
    SuiteReport report;
    report.suite = "linearity";
    auto cps = default_checkpoints(budget.horizon);
    const index_t identity_horizon = std::min<index_t>(budget.horizon, 100'000);

    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        const Point xi = probe_point(e);

        for (double c_mult : c_list) {
            if (c_mult == 0.0) continue;
            SuiteCase sc;
            std::ostringstream desc;
            desc << e.name << ", c=" << fmt(c_mult) << ": bad sets identical under scaling";

            auto scaled_spec = scale_sequence(e.spec, c_mult);
            Point scaled_xi;
            for (double v : xi.coords) scaled_xi.coords.push_back(c_mult * v);

            // Exact index-by-index identity of the bad sets.
            std::size_t mismatches = 0;
            for (index_t k = 1; k <= identity_horizon && mismatches == 0; ++k) {
                Point xk = dsl::eval_sequence(e.spec, k);
                Point sk = dsl::eval_sequence(scaled_spec, k);
                double d = distance(xk, xi, e.norm);
                double sd = distance(sk, scaled_xi, e.norm);
                for (double eps : budget.eps_ladder) {
                    bool bad = d >= r + eps;
                    bool scaled_bad = sd >= std::abs(c_mult) * (r + eps);
                    if (bad != scaled_bad) ++mismatches;
                }
            }

            RoughParams base = make_params(r, alpha, budget);
            RoughParams scaled = make_params(std::abs(c_mult) * r, alpha, budget);
            for (double& eps : scaled.eps_ladder) eps *= std::abs(c_mult);
            auto v1 = test_rough_convergence(pe.table, xi, base, cps, e.norm,
                                             budget.thresholds).verdict;
            auto v2 = test_rough_convergence(scaled_spec, scaled_xi, scaled, cps, e.norm,
                                             budget.thresholds).verdict;
            desc << "; verdicts " << to_string(v1) << "/" << to_string(v2);
            if (mismatches > 0) {
                sc.status = CaseStatus::Fail;
                sc.diagnostics = "bad-set mismatch at " + std::to_string(mismatches) +
                                 " indices";
            } else {
                sc.status = v1 == v2 ? CaseStatus::Pass : CaseStatus::Fail;
                if (sc.status == CaseStatus::Fail)
                    sc.diagnostics = "verdicts differ under radius-covariant scaling";
            }
            sc.description = desc.str();
            report.cases.push_back(std::move(sc));
        }

        // c = 0 collapses everything to the origin.
        if (std::find(c_list.begin(), c_list.end(), 0.0) != c_list.end()) {
            SuiteCase sc;
            Point origin;
            origin.coords.assign(static_cast<std::size_t>(e.spec.dim()), 0.0);
            auto rep = test_rough_convergence(scale_sequence(e.spec, 0.0), origin,
                                              make_params(r, alpha, budget), cps, e.norm,
                                              budget.thresholds);
            sc.description = e.name + ", c=0: 0*x converges to the origin, verdict " +
                             to_string(rep.verdict);
            sc.status = status_from(rep.verdict, ConvergenceVerdict::Converges);
            report.cases.push_back(std::move(sc));
        }
    }

    // Sum soundness on fixed corpus pairs: accepted xi for (x, r1) and eta
    // for (y, r2) must give xi+eta accepted for (x+y, r1+r2).
    struct SumCase {
        const char* x;
        const char* y;
        double xi, eta, r1, r2;
    };
    const SumCase sum_cases[] = {
        {"EX_A", "CONST_2P5", 0.0, 2.5, r, 0.0},
        {"ALT", "CONST_2P5", 0.0, 2.5, r, 0.0},
        {"EX_A", "ALT", 0.0, 0.0, r, r},
    };
    auto find_entry = [&corpus](const char* name) -> const CorpusEntry* {
        for (const CorpusEntry& e : corpus)
            if (e.name == name) return &e;
        return nullptr;
    };
    for (const SumCase& scase : sum_cases) {
        const CorpusEntry* ex = find_entry(scase.x);
        const CorpusEntry* ey = find_entry(scase.y);
        if (!ex || !ey) continue;
        SuiteCase sc;
        std::ostringstream desc;
        desc << "sum(" << scase.x << ", " << scase.y << "), r1=" << fmt(scase.r1)
             << ", r2=" << fmt(scase.r2);
        auto vx = test_rough_convergence(ex->spec, Point{{scase.xi}},
                                         make_params(scase.r1, alpha, budget), cps,
                                         ex->norm, budget.thresholds).verdict;
        auto vy = test_rough_convergence(ey->spec, Point{{scase.eta}},
                                         make_params(scase.r2, alpha, budget), cps,
                                         ey->norm, budget.thresholds).verdict;
        if (vx != ConvergenceVerdict::Converges || vy != ConvergenceVerdict::Converges) {
            desc << ": components not both accepted (vacuous)";
            sc.status = CaseStatus::NotApplicable;
        } else {
            auto sum = sum_sequences(ex->spec, ey->spec);
            auto rep = test_rough_convergence(sum, Point{{scase.xi + scase.eta}},
                                              make_params(scase.r1 + scase.r2, alpha, budget),
                                              cps, ex->norm, budget.thresholds);
            desc << ": sum verdict " << to_string(rep.verdict) << " at xi+eta="
                 << fmt(scase.xi + scase.eta);
            sc.status = status_from(rep.verdict, ConvergenceVerdict::Converges);
        }
        sc.description = desc.str();
        report.cases.push_back(std::move(sc));
    }
    return report;
}

// --------------------------------------------------------- order monotonicity ---

SuiteReport check_order_monotonicity(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::pair<double, double>>& alpha_pairs,
                                     double r, const SuiteBudget& budget) {
    for (const auto& [a, b] : alpha_pairs)
        if (!(a <= b))
            throw InvalidInput("check_order_monotonicity: pairs must satisfy alpha <= beta");

    SuiteReport report;
    report.suite = "monotonicity";
    auto cps = default_checkpoints(budget.horizon);

    auto judge = [&](const SequenceTable& table, const Point& xi, NormKind norm,
                     double a, double b, const std::string& label) {
        auto va = test_rough_convergence(table, xi, make_params(r, a, budget), cps, norm,
                                         budget.thresholds).verdict;
        auto vb = test_rough_convergence(table, xi, make_params(r, b, budget), cps, norm,
                                         budget.thresholds).verdict;
        SuiteCase c;
        std::ostringstream desc;
        desc << label << ", (alpha, beta)=(" << fmt(a) << ", " << fmt(b) << "): "
             << to_string(va) << " -> " << to_string(vb);
        if (va != ConvergenceVerdict::Converges) {
            desc << " (inclusion vacuous)";
            c.status = CaseStatus::Pass;
        } else if (vb == ConvergenceVerdict::Converges) {
            c.status = CaseStatus::Pass;
        } else if (vb == ConvergenceVerdict::Inconclusive) {
            c.status = CaseStatus::Inconclusive;
        } else {
            c.status = CaseStatus::Fail;
            c.diagnostics = "inclusion violated: Converges at alpha, Diverges at beta";
        }
        c.description = desc.str();
        report.cases.push_back(std::move(c));
    };

    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        const Point xi = probe_point(e);
        for (const auto& [a, b] : alpha_pairs)
            judge(pe.table, xi, e.norm, a, b, e.name + " at xi=" + fmt(xi));
    }

    // Randomized indicator sequences on perfect-power index sets.
    std::mt19937 rng(1234567);
    for (int trial = 0; trial < 12; ++trial) {
        int p = 2 + static_cast<int>(rng() % 4);
        int height = 1 + static_cast<int>(rng() % 3);
        std::ostringstream text;
        text << "if is_power(n, " << p << ") then " << height << " else 0";
        auto spec = dsl::parse_sequence(text.str());
        auto table = materialize(spec, budget.horizon);
        std::uniform_real_distribution<double> alpha_pick(0.1, 1.0);
        double a = alpha_pick(rng), b = alpha_pick(rng);
        if (a > b) std::swap(a, b);
        judge(table, Point{{0.0}}, NormKind::L2, a, b, "random: " + text.str());
    }
    return report;
}

// ------------------------------------------------------------------ explorer ---

SuiteReport explore_diameter(const std::vector<CorpusEntry>& corpus,
                             const std::vector<double>& r_list,
                             const std::vector<double>& alpha_list,
                             const SuiteBudget& budget) {
    for (double r : r_list)
        if (!(r > 0.0)) throw InvalidInput("explore_diameter: radii must be positive");
    for (double alpha : alpha_list)
        if (!(alpha > 0.0) || !(alpha < 1.0))
            throw InvalidInput("explore_diameter: orders must lie strictly inside (0, 1)");

    SuiteReport report;
    report.suite = "diameter";
    auto cps = default_checkpoints(budget.horizon);
    double max_ratio = -1.0;
    std::string max_label = "none";

    for (const auto& pe : prepare(corpus, budget)) {
        const CorpusEntry& e = *pe.entry;
        for (double r : r_list) {
            // One scan per radius; the counts serve every alpha.
            std::vector<RoughParams> params_list;
            for (double alpha : alpha_list) params_list.push_back(make_params(r, alpha, budget));
            auto estimates = estimate_limit_sets(pe.table, params_list, cps, e.norm,
                                                 pe.grid, budget.thresholds);
            for (std::size_t i = 0; i < alpha_list.size(); ++i) {
                const auto& est = estimates[i];
                SuiteCase c;
                std::ostringstream desc;
                std::string label = e.name + ", r=" + fmt(r) + ", alpha=" + fmt(alpha_list[i]);
                if (est.accepted_count() == 0) {
                    desc << label << ": empty accepted set";
                } else {
                    double ratio = est.diameter / (2.0 * r);
                    bool flagged = ratio > 1.0 + est.uncertainty / r;
                    if (ratio > max_ratio) {
                        max_ratio = ratio;
                        max_label = label;
                    }
                    if (flagged) desc << "RATIO ABOVE 2r BOUND: ";
                    desc << label << ": diameter " << fmt(est.diameter) << ", ratio "
                         << fmt(ratio);
                }
                c.description = desc.str();
                c.status = CaseStatus::Pass; // exploration, not a gate
                report.cases.push_back(std::move(c));
            }
        }
    }

    SuiteCase summary;
    summary.description = max_ratio < 0.0
                              ? "max diameter/2r ratio: no nonempty sets"
                              : "max diameter/2r ratio " + fmt(max_ratio) + " at " + max_label;
    summary.status = CaseStatus::Pass;
    report.cases.push_back(std::move(summary));
    return report;
}

// ----------------------------------------------------------------- dispatcher ---

std::vector<std::string> suite_names() {
    return {"boundedness", "contiguity", "decomposition", "cluster",
            "midpoint",    "linearity",  "monotonicity",  "diameter"};
}

SuiteReport run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                      const SuiteBudget& budget) {
    if (name == "boundedness")
        return check_boundedness_equivalence(corpus, 1.0, {0.5, 1.5, 4.0, 16.0, 64.0}, budget);
    if (name == "contiguity") return check_contiguity(corpus, {0.5, 1.0, 2.0}, 1.0, budget);
    if (name == "decomposition")
        return check_decomposition(corpus, {0.5, 1.5}, {0.5, 1.0}, budget);
    if (name == "cluster")
        return check_cluster_distance(corpus, {0.2, 1.0, 1.5}, 1.0, 0.1, budget);
    if (name == "midpoint") return check_midpoint_strict_convexity(corpus, 1.0, 1.0, budget);
    if (name == "linearity")
        return check_linearity(corpus, {2.0, 0.5, -1.0, 0.0}, 1.5, 1.0, budget);
    if (name == "monotonicity")
        return check_order_monotonicity(
            corpus, {{0.4, 0.8}, {0.3, 0.4}, {0.5, 1.0}, {0.25, 0.75}}, 0.1, budget);
    if (name == "diameter")
        return explore_diameter(corpus, {0.5, 1.0, 2.0}, {0.25, 0.5, 0.75}, budget);
    throw InvalidInput("unknown suite: " + name + " (expected one of boundedness, "
                       "contiguity, decomposition, cluster, midpoint, linearity, "
                       "monotonicity, diameter)");
}

} // namespace roughstat
