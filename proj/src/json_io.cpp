#include "roughstat/json_io.hpp"

#include <sstream>

namespace roughstat {

ordered_json to_json(const Point& p) {
    ordered_json arr = ordered_json::array();
    for (double c : p.coords) arr.push_back(c);
    return arr;
}

ordered_json to_json(const RoughParams& params) {
    ordered_json j;
    j["r"] = params.r;
    j["alpha"] = params.alpha;
    j["eps_ladder"] = params.eps_ladder;
    return j;
}

ordered_json to_json(const Checkpoints& cps) {
    ordered_json j;
    j["values"] = cps.values;
    j["horizon"] = cps.horizon();
    return j;
}

ordered_json to_json(const DensityVerdict& dv) {
    ordered_json j;
    j["ratios"] = dv.ratios;
    j["slope"] = dv.slope;
    j["final_ratio"] = dv.final_ratio;
    j["verdict"] = to_string(dv.verdict);
    return j;
}

ordered_json to_json(const ConvergenceReport& report) {
    ordered_json j;
    j["xi"] = to_json(report.xi);
    j["params"] = to_json(report.params);
    ordered_json per_eps = ordered_json::array();
    for (const auto& [eps, dv] : report.per_eps) {
        ordered_json rung;
        rung["eps"] = eps;
        rung["density"] = to_json(dv);
        per_eps.push_back(std::move(rung));
    }
    j["per_eps"] = std::move(per_eps);
    j["verdict"] = to_string(report.verdict);
    return j;
}

ordered_json to_json(const LimitSetEstimate& est) {
    ordered_json j;
    ordered_json grid = ordered_json::array();
    for (const Point& p : est.grid) grid.push_back(to_json(p));
    j["grid"] = std::move(grid);
    j["accepted"] = est.accepted;
    if (est.hull) {
        ordered_json hull;
        hull["min"] = to_json(est.hull->first);
        hull["max"] = to_json(est.hull->second);
        j["hull"] = std::move(hull);
    } else {
        j["hull"] = nullptr;
    }
    j["diameter"] = est.diameter;
    j["uncertainty"] = est.uncertainty;
    return j;
}

ordered_json to_json(const ClusterEstimate& est) {
    ordered_json j;
    ordered_json grid = ordered_json::array();
    for (const Point& p : est.grid) grid.push_back(to_json(p));
    j["grid"] = std::move(grid);
    j["positive"] = est.positive;
    j["eps"] = est.eps;
    return j;
}

ordered_json to_json(const BoundednessResult& result) {
    ordered_json j;
    j["kind"] = to_string(result.kind);
    if (result.kind == BoundednessKind::Bounded) j["bound"] = result.bound;
    else j["bound"] = nullptr;
    ordered_json per_m = ordered_json::array();
    for (const auto& [m, verdict] : result.per_m) {
        ordered_json rung;
        rung["m"] = m;
        rung["verdict"] = to_string(verdict);
        per_m.push_back(std::move(rung));
    }
    j["per_m"] = std::move(per_m);
    j["untestable"] = result.untestable;
    return j;
}

ordered_json to_json(const SuiteReport& report) {
    ordered_json j;
    j["suite"] = report.suite;
    ordered_json cases = ordered_json::array();
    for (const SuiteCase& c : report.cases) {
        ordered_json jc;
        jc["description"] = c.description;
        jc["status"] = to_string(c.status);
        jc["diagnostics"] = c.diagnostics;
        cases.push_back(std::move(jc));
    }
    j["cases"] = std::move(cases);
    ordered_json summary;
    summary["pass"] = report.count(CaseStatus::Pass);
    summary["fail"] = report.count(CaseStatus::Fail);
    summary["inconclusive"] = report.count(CaseStatus::Inconclusive);
    summary["not_applicable"] = report.count(CaseStatus::NotApplicable);
    j["summary"] = std::move(summary);
    return j;
}

namespace {

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string ratios_csv(const PrefixCounts& pc, const std::vector<double>& ratios) {
    std::ostringstream os;
    os << "n,count,ratio\n";
    for (std::size_t j = 0; j < pc.counts.size(); ++j)
        os << pc.checkpoints.values[j] << ',' << pc.counts[j] << ','
           << csv_num(ratios[j]) << '\n';
    return os.str();
}

std::string plot_csv(const Checkpoints& cps, const std::vector<double>& ratios) {
    std::ostringstream os;
    os << "n,ratio\n";
    for (std::size_t j = 0; j < ratios.size(); ++j)
        os << cps.values[j] << ',' << csv_num(ratios[j]) << '\n';
    return os.str();
}

} // namespace roughstat
