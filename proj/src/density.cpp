#include "roughstat/density.hpp"

#include <algorithm>
#include <cmath>

namespace roughstat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "Zero";
        case Verdict::NonZero: return "NonZero";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

PrefixCounts prefix_counts(const std::function<bool(index_t)>& pred, const Checkpoints& cps) {
    cps.validate();
    PrefixCounts pc;
    pc.checkpoints = cps;
    pc.counts.reserve(cps.size());
    index_t count = 0;
    std::size_t next = 0;
    for (index_t k = 1; k <= cps.horizon(); ++k) {
        if (pred(k)) ++count;
        if (k == cps.values[next]) {
            pc.counts.push_back(count);
            ++next;
        }
    }
    return pc;
}

PrefixCounts prefix_counts(const dsl::IndexPredicateSpec& pred, const Checkpoints& cps) {
    return prefix_counts(
        [&pred](index_t k) { return dsl::eval_predicate(pred, k); }, cps);
}

std::vector<double> alpha_ratios(const PrefixCounts& pc, double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw InvalidInput("alpha_ratios: alpha must be in (0, 1]");
    std::vector<double> ratios;
    ratios.reserve(pc.counts.size());
    for (std::size_t j = 0; j < pc.counts.size(); ++j) {
        double n = static_cast<double>(pc.checkpoints.values[j]);
        ratios.push_back(static_cast<double>(pc.counts[j]) / std::pow(n, alpha));
    }
    return ratios;
}

namespace {

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

} // namespace

DensityVerdict decide_zero(const std::vector<double>& ratios, const Checkpoints& cps,
                           const DensityThresholds& th) {
    if (ratios.size() != cps.size())
        throw InvalidInput("decide_zero: ratios/checkpoints length mismatch");
    if (ratios.empty()) throw InvalidInput("decide_zero: empty ratios");

    DensityVerdict dv;
    dv.ratios = ratios;
    dv.final_ratio = ratios.back();

    const std::size_t total = ratios.size();
    const bool have_slope = total >= 3;
    if (total >= 2) {
        std::size_t window = std::min<std::size_t>(
            static_cast<std::size_t>(th.slope_window), total);
        std::vector<double> xs, ys;
        xs.reserve(window);
        ys.reserve(window);
        for (std::size_t j = total - window; j < total; ++j) {
            xs.push_back(std::log(static_cast<double>(cps.values[j])));
            ys.push_back(std::log(std::max(ratios[j], th.ratio_floor)));
        }
        dv.slope = ls_slope(xs, ys);
    }

    const double final = dv.final_ratio;
    if (final <= th.tau_zero ||
        (have_slope && dv.slope <= -th.slope_min && final <= th.slope_rule_cap)) {
        dv.verdict = Verdict::Zero;
    } else if (final >= th.tau_nonzero && (!have_slope || dv.slope > -th.slope_min)) {
        dv.verdict = Verdict::NonZero;
    } else {
        dv.verdict = Verdict::Inconclusive;
    }
    return dv;
}

} // namespace roughstat
