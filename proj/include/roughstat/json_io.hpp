#pragma once

// Stable JSON and CSV serialization for reports. Key names and nesting are
// part of the tool's output contract; change them only with a major version.

#include <string>

#include <json.hpp>

#include "roughstat/density.hpp"
#include "roughstat/rough.hpp"
#include "roughstat/verify.hpp"

namespace roughstat {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Point& p);
ordered_json to_json(const RoughParams& params);
ordered_json to_json(const Checkpoints& cps);
ordered_json to_json(const DensityVerdict& dv);
ordered_json to_json(const ConvergenceReport& report);
ordered_json to_json(const LimitSetEstimate& est);
ordered_json to_json(const ClusterEstimate& est);
ordered_json to_json(const BoundednessResult& result);
ordered_json to_json(const SuiteReport& report);

// Rows `n,count,ratio` with a header line.
std::string ratios_csv(const PrefixCounts& pc, const std::vector<double>& ratios);

// Rows `n,ratio` for plotting.
std::string plot_csv(const Checkpoints& cps, const std::vector<double>& ratios);

} // namespace roughstat
