#pragma once

// Prefix counts |K_n|, ratios |K_n| / n^alpha and the finite-horizon decision
// about whether the alpha-order density limit is zero.

#include <functional>
#include <string>
#include <vector>

#include "roughstat/core.hpp"
#include "roughstat/seqdsl.hpp"

namespace roughstat {

struct PrefixCounts {
    Checkpoints checkpoints;
    std::vector<index_t> counts; // |K_{n_j}| per checkpoint
};

enum class Verdict { Zero, NonZero, Inconclusive };

std::string to_string(Verdict v);

// Decision thresholds; defaults are the desk-scale calibration.
struct DensityThresholds {
    double tau_zero = 0.05;      // final ratio at or below this -> Zero
    double tau_nonzero = 0.25;   // final ratio at or above this (and flat slope) -> NonZero
    double slope_min = 0.02;     // decay slopes steeper than -slope_min count as decaying
    double slope_rule_cap = 2.0; // decay rule only applies when final ratio <= this
    double ratio_floor = 1e-12;  // floor before taking logs
    int slope_window = 8;        // fit over at most this many trailing checkpoints
};

struct DensityVerdict {
    std::vector<double> ratios;
    double slope = 0.0;       // fitted log-log decay exponent
    double final_ratio = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

// Exact |{k <= n_j : pred(k)}| by a single forward scan to the horizon.
PrefixCounts prefix_counts(const dsl::IndexPredicateSpec& pred, const Checkpoints& cps);
PrefixCounts prefix_counts(const std::function<bool(index_t)>& pred, const Checkpoints& cps);

std::vector<double> alpha_ratios(const PrefixCounts& pc, double alpha);

// Slope is the least-squares slope of log(max(ratio, floor)) against log(n)
// over the trailing slope_window checkpoints. With fewer than 3 checkpoints
// only the level rule applies.
DensityVerdict decide_zero(const std::vector<double>& ratios, const Checkpoints& cps,
                           const DensityThresholds& thresholds = {});

} // namespace roughstat
