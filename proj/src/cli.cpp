#include "roughstat/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "roughstat/json_io.hpp"

namespace roughstat {

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

struct RunConfig {
    std::string subcommand;
    std::string seq;
    std::string pred;
    std::string xi_text;
    double r = 0.0;
    double alpha = 1.0;
    std::string eps_text = "0.5,0.1,0.02";
    index_t horizon = 1'000'000;
    std::string grid_text; // min:max:step[,min:max:step]
    double grid_step = 0.05;
    std::string norm_text = "l2";
    std::string format = "table";
    std::string out_path;
    std::string dump_ratios_path;
    std::string corpus_path;
    std::string suite = "all";
    double cluster_eps = 0.1;
    index_t preview = 10;
    double tau_zero = 0.05;
    double tau_nonzero = 0.25;
    double slope_min = 0.02;
    bool deterministic = false;
};

ordered_json to_json(const RunConfig& cfg) {
    ordered_json j;
    j["subcommand"] = cfg.subcommand;
    j["seq"] = cfg.seq;
    j["pred"] = cfg.pred;
    j["xi"] = cfg.xi_text;
    j["r"] = cfg.r;
    j["alpha"] = cfg.alpha;
    j["eps_ladder"] = cfg.eps_text;
    j["n"] = cfg.horizon;
    j["grid"] = cfg.grid_text;
    j["grid_step"] = cfg.grid_step;
    j["norm"] = cfg.norm_text;
    j["format"] = cfg.format;
    j["out"] = cfg.out_path;
    j["dump_ratios"] = cfg.dump_ratios_path;
    j["corpus"] = cfg.corpus_path;
    j["suite"] = cfg.suite;
    j["cluster_eps"] = cfg.cluster_eps;
    j["preview"] = cfg.preview;
    j["tau_zero"] = cfg.tau_zero;
    j["tau_nonzero"] = cfg.tau_nonzero;
    j["slope_min"] = cfg.slope_min;
    j["deterministic"] = cfg.deterministic;
    return j;
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput(std::string(what) + ": cannot parse number '" + item + "'");
        }
    }
    if (values.empty()) throw InvalidInput(std::string(what) + ": empty list");
    return values;
}

Point parse_point(const std::string& text) {
    Point p{parse_number_list(text, "--xi")};
    return p;
}

GridAxis parse_axis(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<double> v;
    while (std::getline(ss, part, ':')) v.push_back(std::stod(part));
    if (v.size() != 3) throw InvalidInput("--grid: axis must be min:max:step, got " + text);
    return {v[0], v[1], v[2]};
}

GridSpec parse_grid(const std::string& text, int dim) {
    GridSpec grid;
    if (text.empty()) {
        // default candidate boxes
        if (dim == 1) grid.axes = {{-4.0, 4.0, 0.05}};
        else grid.axes = {{-2.0, 2.0, 0.05}, {-2.0, 2.0, 0.05}};
        return grid;
    }
    std::stringstream ss(text);
    std::string axis;
    while (std::getline(ss, axis, ',')) grid.axes.push_back(parse_axis(axis));
    return grid;
}

RoughParams params_from(const RunConfig& cfg) {
    RoughParams p;
    p.r = cfg.r;
    p.alpha = cfg.alpha;
    p.eps_ladder = parse_number_list(cfg.eps_text, "--eps");
    p.validate();
    return p;
}

DensityThresholds thresholds_from(const RunConfig& cfg) {
    DensityThresholds th;
    th.tau_zero = cfg.tau_zero;
    th.tau_nonzero = cfg.tau_nonzero;
    th.slope_min = cfg.slope_min;
    return th;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct CommandOutput {
    int exit_code = kOk;
    ordered_json result;
    std::string table;
    std::string csv;
};

void emit(const RunConfig& cfg, const CommandOutput& out_data, std::ostream& out,
          std::ostream& err) {
    std::string payload;
    if (cfg.format == "json") {
        ordered_json doc;
        doc["config"] = to_json(cfg);
        if (!cfg.deterministic) {
            ordered_json meta;
            meta["tool"] = "rough-stat";
            meta["version"] = kVersion;
            meta["generated_at"] = iso_timestamp();
            doc["meta"] = std::move(meta);
        }
        doc["result"] = out_data.result;
        payload = doc.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        payload = out_data.csv;
    } else {
        payload = out_data.table;
    }
    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "error: cannot open output file " << cfg.out_path << "\n";
            return;
        }
        file << payload;
    } else {
        out << payload;
    }
}

void maybe_dump_ratios(const RunConfig& cfg, const Checkpoints& cps,
                       const std::vector<double>& ratios, std::ostream& err) {
    if (cfg.dump_ratios_path.empty()) return;
    std::ofstream file(cfg.dump_ratios_path);
    if (!file) {
        err << "error: cannot open " << cfg.dump_ratios_path << "\n";
        return;
    }
    file << plot_csv(cps, ratios);
}

// ---------------------------------------------------------- subcommands ---

CommandOutput run_density(const RunConfig& cfg, std::ostream& err) {
    auto cps = default_checkpoints(cfg.horizon);
    auto pred = dsl::parse_predicate(cfg.pred);
    auto pc = prefix_counts(pred, cps);
    auto ratios = alpha_ratios(pc, cfg.alpha);
    auto dv = decide_zero(ratios, cps, thresholds_from(cfg));
    maybe_dump_ratios(cfg, cps, ratios, err);

    CommandOutput out;
    out.result["predicate"] = cfg.pred;
    out.result["alpha"] = cfg.alpha;
    out.result["checkpoints"] = roughstat::to_json(cps);
    out.result["counts"] = pc.counts;
    out.result["density"] = roughstat::to_json(dv);
    out.csv = ratios_csv(pc, ratios);

    std::ostringstream table;
    table << "alpha-order density of {k : " << cfg.pred << "}\n";
    table << "  alpha = " << cfg.alpha << ", N = " << cfg.horizon << "\n";
    table << "  n, count, count/n^alpha\n";
    for (std::size_t j = 0; j < pc.counts.size(); ++j)
        table << "  " << cps.values[j] << ", " << pc.counts[j] << ", " << ratios[j] << "\n";
    table << "  fitted slope " << dv.slope << ", final ratio " << dv.final_ratio << "\n";
    table << "verdict: " << to_string(dv.verdict) << "\n";
    out.table = table.str();

    out.exit_code = dv.verdict == Verdict::Zero ? kOk
                    : dv.verdict == Verdict::NonZero ? kNegative : kInconclusive;
    return out;
}

CommandOutput run_converge(const RunConfig& cfg, std::ostream& err) {
    auto cps = default_checkpoints(cfg.horizon);
    auto spec = dsl::sequence_from_text_or_builtin(cfg.seq);
    Point xi = parse_point(cfg.xi_text);
    auto params = params_from(cfg);
    auto norm = norm_kind_from_string(cfg.norm_text);
    auto report = test_rough_convergence(spec, xi, params, cps, norm, thresholds_from(cfg));
    maybe_dump_ratios(cfg, cps, report.per_eps.back().second.ratios, err);

    CommandOutput out;
    out.result = roughstat::to_json(report);

    std::ostringstream table;
    table << "rough statistical convergence of " << cfg.seq << " to xi=" << cfg.xi_text
          << "\n  r = " << params.r << ", alpha = " << params.alpha
          << ", N = " << cfg.horizon << ", norm = " << to_string(norm) << "\n";
    for (const auto& [eps, dv] : report.per_eps)
        table << "  eps = " << eps << ": final ratio " << dv.final_ratio << ", slope "
              << dv.slope << ", " << to_string(dv.verdict) << "\n";
    table << "verdict: " << to_string(report.verdict) << "\n";
    out.table = table.str();

    std::ostringstream csv;
    csv << "eps,final_ratio,slope,verdict\n";
    for (const auto& [eps, dv] : report.per_eps)
        csv << eps << ',' << dv.final_ratio << ',' << dv.slope << ','
            << to_string(dv.verdict) << "\n";
    out.csv = csv.str();

    out.exit_code = report.verdict == ConvergenceVerdict::Converges ? kOk
                    : report.verdict == ConvergenceVerdict::Diverges ? kNegative
                                                                     : kInconclusive;
    return out;
}

CommandOutput run_limitset(const RunConfig& cfg, std::ostream&) {
    auto cps = default_checkpoints(cfg.horizon);
    auto spec = dsl::sequence_from_text_or_builtin(cfg.seq);
    auto params = params_from(cfg);
    auto norm = norm_kind_from_string(cfg.norm_text);
    auto grid = parse_grid(cfg.grid_text, spec.dim());
    auto est = estimate_limit_set(spec, params, cps, norm, grid, thresholds_from(cfg));

    CommandOutput out;
    out.result = roughstat::to_json(est);

    std::ostringstream table;
    table << "rough statistical limit set of " << cfg.seq << "\n  r = " << params.r
          << ", alpha = " << params.alpha << ", N = " << cfg.horizon << ", norm = "
          << to_string(norm) << "\n";
    table << "  candidates " << est.grid.size() << ", accepted " << est.accepted_count()
          << ", uncertainty " << est.uncertainty << "\n";
    if (est.hull) {
        table << "  hull: min (";
        for (int d = 0; d < est.hull->first.dim(); ++d)
            table << (d ? ", " : "") << est.hull->first[d];
        table << "), max (";
        for (int d = 0; d < est.hull->second.dim(); ++d)
            table << (d ? ", " : "") << est.hull->second[d];
        table << ")\n  diameter " << est.diameter << "\n";
    } else {
        table << "  accepted set empty\n";
    }
    out.table = table.str();

    std::ostringstream csv;
    csv << "candidate,accepted,verdict\n";
    for (std::size_t i = 0; i < est.grid.size(); ++i) {
        for (int d = 0; d < est.grid[i].dim(); ++d) csv << (d ? ";" : "") << est.grid[i][d];
        csv << ',' << (est.accepted[i] ? 1 : 0) << ',' << to_string(est.verdicts[i]) << "\n";
    }
    out.csv = csv.str();

    if (est.accepted_count() > 0) {
        out.exit_code = kOk;
    } else {
        bool any_inconclusive = false;
        for (auto v : est.verdicts)
            if (v == ConvergenceVerdict::Inconclusive) any_inconclusive = true;
        out.exit_code = any_inconclusive ? kInconclusive : kNegative;
    }
    return out;
}

CommandOutput run_cluster(const RunConfig& cfg, std::ostream&) {
    auto cps = default_checkpoints(cfg.horizon);
    auto spec = dsl::sequence_from_text_or_builtin(cfg.seq);
    auto norm = norm_kind_from_string(cfg.norm_text);
    auto grid = parse_grid(cfg.grid_text, spec.dim());
    auto est = estimate_cluster_points(spec, cfg.alpha, cfg.cluster_eps, cps, norm, grid,
                                       thresholds_from(cfg));

    CommandOutput out;
    out.result = roughstat::to_json(est);

    std::size_t positives = 0;
    for (bool p : est.positive) positives += p ? 1 : 0;
    std::ostringstream table;
    table << "rough statistical cluster points of " << cfg.seq << "\n  alpha = "
          << cfg.alpha << ", eps = " << cfg.cluster_eps << ", N = " << cfg.horizon << "\n";
    table << "  candidates " << est.grid.size() << ", positive " << positives << "\n";
    if (positives > 0 && positives <= 64) {
        table << "  positives:";
        for (std::size_t i = 0; i < est.grid.size(); ++i) {
            if (!est.positive[i]) continue;
            table << " (";
            for (int d = 0; d < est.grid[i].dim(); ++d) table << (d ? ", " : "") << est.grid[i][d];
            table << ")";
        }
        table << "\n";
    }
    out.table = table.str();

    std::ostringstream csv;
    csv << "candidate,positive,verdict\n";
    for (std::size_t i = 0; i < est.grid.size(); ++i) {
        for (int d = 0; d < est.grid[i].dim(); ++d) csv << (d ? ";" : "") << est.grid[i][d];
        csv << ',' << (est.positive[i] ? 1 : 0) << ',' << to_string(est.verdicts[i]) << "\n";
    }
    out.csv = csv.str();

    if (positives > 0) {
        out.exit_code = kOk;
    } else {
        bool any_inconclusive = false;
        for (auto v : est.verdicts)
            if (v == Verdict::Inconclusive) any_inconclusive = true;
        out.exit_code = any_inconclusive ? kInconclusive : kNegative;
    }
    return out;
}

CommandOutput run_bounded(const RunConfig& cfg, std::ostream&) {
    auto cps = default_checkpoints(cfg.horizon);
    auto spec = dsl::sequence_from_text_or_builtin(cfg.seq);
    auto norm = norm_kind_from_string(cfg.norm_text);
    auto res = is_statistically_bounded(spec, cfg.alpha, cps, norm, default_m_schedule(),
                                        thresholds_from(cfg));

    CommandOutput out;
    out.result = roughstat::to_json(res);

    std::ostringstream table;
    table << "statistical boundedness of " << cfg.seq << " at alpha = " << cfg.alpha
          << ", N = " << cfg.horizon << "\n";
    for (const auto& [m, verdict] : res.per_m)
        table << "  M = " << m << ": exceedance verdict " << to_string(verdict) << "\n";
    if (!res.untestable.empty()) {
        table << "  untestable at this horizon:";
        for (double m : res.untestable) table << " " << m;
        table << "\n";
    }
    table << "verdict: " << to_string(res.kind);
    if (res.kind == BoundednessKind::Bounded) table << "(M=" << res.bound << ")";
    table << "\n";
    out.table = table.str();

    std::ostringstream csv;
    csv << "m,verdict\n";
    for (const auto& [m, verdict] : res.per_m)
        csv << m << ',' << to_string(verdict) << "\n";
    out.csv = csv.str();

    out.exit_code = res.kind == BoundednessKind::Bounded ? kOk
                    : res.kind == BoundednessKind::NotDetected ? kNegative
                                                               : kInconclusive;
    return out;
}

CommandOutput run_project(const RunConfig& cfg, std::ostream&) {
    auto spec = dsl::sequence_from_text_or_builtin(cfg.seq);
    Point xi = parse_point(cfg.xi_text);
    auto norm = norm_kind_from_string(cfg.norm_text);
    auto x = materialize(spec, cfg.horizon);
    auto y = project_toward(x, xi, cfg.r, norm);
    auto [res_radius, res_identity] = projection_residuals(x, y, xi, cfg.r, norm);

    CommandOutput out;
    out.result["residual_radius"] = res_radius;
    out.result["residual_identity"] = res_identity;
    ordered_json preview = ordered_json::array();
    index_t shown = std::min<index_t>(cfg.preview, x.n);
    for (index_t k = 1; k <= shown; ++k) {
        ordered_json row;
        row["k"] = k;
        row["x"] = roughstat::to_json(x.at(k));
        row["y"] = roughstat::to_json(y.at(k));
        preview.push_back(std::move(row));
    }
    out.result["preview"] = std::move(preview);

    std::ostringstream table;
    table << "radial projection of " << cfg.seq << " toward xi=" << cfg.xi_text
          << " with r = " << cfg.r << "\n";
    for (index_t k = 1; k <= shown; ++k) {
        table << "  k=" << k << ": x=(";
        Point xk = x.at(k), yk = y.at(k);
        for (int d = 0; d < xk.dim(); ++d) table << (d ? ", " : "") << xk[d];
        table << ") -> y=(";
        for (int d = 0; d < yk.dim(); ++d) table << (d ? ", " : "") << yk[d];
        table << ")\n";
    }
    table << "  contract residuals over k <= " << x.n << ": radius " << res_radius
          << ", identity " << res_identity << "\n";
    out.table = table.str();

    std::ostringstream csv;
    csv << "k,x,y\n";
    for (index_t k = 1; k <= shown; ++k) {
        Point xk = x.at(k), yk = y.at(k);
        csv << k << ',';
        for (int d = 0; d < xk.dim(); ++d) csv << (d ? ";" : "") << xk[d];
        csv << ',';
        for (int d = 0; d < yk.dim(); ++d) csv << (d ? ";" : "") << yk[d];
        csv << "\n";
    }
    out.csv = csv.str();

    out.exit_code = (res_radius <= 1e-9 && res_identity <= 1e-9) ? kOk : kNegative;
    return out;
}

void render_suite(const SuiteReport& report, std::ostringstream& table,
                  std::ostringstream& csv) {
    table << "suite " << report.suite << ": " << report.count(CaseStatus::Pass) << " pass, "
          << report.count(CaseStatus::Fail) << " fail, "
          << report.count(CaseStatus::Inconclusive) << " inconclusive, "
          << report.count(CaseStatus::NotApplicable) << " not-applicable\n";
    for (const SuiteCase& c : report.cases) {
        table << "  [" << to_string(c.status) << "] " << c.description;
        if (!c.diagnostics.empty()) table << " -- " << c.diagnostics;
        table << "\n";
    }
    for (const SuiteCase& c : report.cases) {
        std::string desc = c.description;
        for (char& ch : desc)
            if (ch == ',') ch = ';';
        csv << report.suite << ',' << to_string(c.status) << ',' << desc << "\n";
    }
}

CommandOutput run_verify(const RunConfig& cfg, std::ostream&) {
    SuiteBudget budget;
    budget.horizon = cfg.horizon;
    budget.grid_step = cfg.grid_step;
    budget.eps_ladder = parse_number_list(cfg.eps_text, "--eps");
    budget.thresholds = thresholds_from(cfg);
    auto corpus = cfg.corpus_path.empty() ? builtin_corpus()
                                          : load_corpus_file(cfg.corpus_path);

    std::vector<SuiteReport> reports;
    if (cfg.suite == "all") {
        for (const std::string& name : suite_names())
            reports.push_back(run_suite(name, corpus, budget));
    } else {
        reports.push_back(run_suite(cfg.suite, corpus, budget));
    }

    CommandOutput out;
    ordered_json suites = ordered_json::array();
    for (const SuiteReport& r : reports) suites.push_back(roughstat::to_json(r));
    out.result["suites"] = std::move(suites);

    std::ostringstream table, csv;
    csv << "suite,status,description\n";
    int total_fail = 0;
    for (const SuiteReport& r : reports) {
        render_suite(r, table, csv);
        total_fail += r.count(CaseStatus::Fail);
    }
    table << (total_fail == 0 ? "all suites pass" : "FAILURES present") << "\n";
    out.table = table.str();
    out.csv = csv.str();
    out.exit_code = total_fail == 0 ? kOk : kNegative;
    return out;
}

CommandOutput run_explore_diameter(const RunConfig& cfg, const std::string& r_list_text,
                                   const std::string& alpha_list_text, std::ostream&) {
    SuiteBudget budget;
    budget.horizon = cfg.horizon;
    budget.grid_step = cfg.grid_step;
    budget.eps_ladder = parse_number_list(cfg.eps_text, "--eps");
    budget.thresholds = thresholds_from(cfg);
    auto corpus = cfg.corpus_path.empty() ? builtin_corpus()
                                          : load_corpus_file(cfg.corpus_path);
    auto r_list = parse_number_list(r_list_text, "--r-list");
    auto alpha_list = parse_number_list(alpha_list_text, "--alpha-list");
    auto report = explore_diameter(corpus, r_list, alpha_list, budget);

    CommandOutput out;
    out.result = roughstat::to_json(report);
    std::ostringstream table, csv;
    csv << "suite,status,description\n";
    render_suite(report, table, csv);
    out.table = table.str();
    out.csv = csv.str();
    out.exit_code = kOk;
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rough-stat: rough statistical convergence of order alpha"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string r_list_text = "0.5,1,2";
    std::string alpha_list_text = "0.25,0.5,0.75";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", cfg.horizon, "horizon N (default 1000000)");
        cmd->add_option("--alpha", cfg.alpha, "density order in (0, 1]");
        cmd->add_option("--eps", cfg.eps_text, "eps ladder, comma separated, decreasing");
        cmd->add_option("--norm", cfg.norm_text, "norm: l1, l2 or linf");
        cmd->add_option("--format", cfg.format, "output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_option("--out", cfg.out_path, "write the report to a file");
        cmd->add_option("--tau-zero", cfg.tau_zero, "Zero level threshold");
        cmd->add_option("--tau-nonzero", cfg.tau_nonzero, "NonZero level threshold");
        cmd->add_option("--slope-min", cfg.slope_min, "minimal decay slope magnitude");
        cmd->add_flag("--deterministic", cfg.deterministic,
                      "omit run metadata for byte-identical output");
    };

    auto* density = app.add_subcommand("density", "alpha-order density of an index set");
    density->add_option("--pred", cfg.pred, "index predicate over n")->required();
    density->add_option("--dump-ratios", cfg.dump_ratios_path, "write n,ratio CSV");
    add_common(density);

    auto* converge = app.add_subcommand("converge", "test rough convergence to xi");
    converge->add_option("--seq", cfg.seq, "sequence DSL text or builtin name")->required();
    converge->add_option("--xi", cfg.xi_text, "candidate limit, comma separated")->required();
    converge->add_option("--r", cfg.r, "roughness radius")->required();
    converge->add_option("--dump-ratios", cfg.dump_ratios_path,
                         "write n,ratio CSV for the smallest eps");
    add_common(converge);

    auto* limitset = app.add_subcommand("limitset", "estimate the rough limit set");
    limitset->add_option("--seq", cfg.seq, "sequence DSL text or builtin name")->required();
    limitset->add_option("--r", cfg.r, "roughness radius")->required();
    limitset->add_option("--grid", cfg.grid_text, "min:max:step per axis, comma separated");
    add_common(limitset);

    auto* cluster = app.add_subcommand("cluster", "estimate rough cluster points");
    cluster->add_option("--seq", cfg.seq, "sequence DSL text or builtin name")->required();
    cluster->add_option("--eps-cluster", cfg.cluster_eps, "neighborhood radius");
    cluster->add_option("--grid", cfg.grid_text, "min:max:step per axis, comma separated");
    add_common(cluster);

    auto* bounded = app.add_subcommand("bounded", "statistical boundedness scan");
    bounded->add_option("--seq", cfg.seq, "sequence DSL text or builtin name")->required();
    add_common(bounded);

    auto* project = app.add_subcommand("project", "radial projection toward xi");
    project->add_option("--seq", cfg.seq, "sequence DSL text or builtin name")->required();
    project->add_option("--xi", cfg.xi_text, "projection centre")->required();
    project->add_option("--r", cfg.r, "projection radius")->required();
    project->add_option("--preview", cfg.preview, "terms to print (default 10)");
    add_common(project);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite,
                       "all, boundedness, contiguity, decomposition, cluster, midpoint, "
                       "linearity, monotonicity or diameter");
    verify->add_option("--corpus", cfg.corpus_path, "corpus file (name = expr lines)");
    verify->add_option("--grid-step", cfg.grid_step, "grid step for suite estimates");
    add_common(verify);

    auto* explore = app.add_subcommand("explore-diameter", "diameter/2r exploration");
    explore->add_option("--r-list", r_list_text, "radii, comma separated");
    explore->add_option("--alpha-list", alpha_list_text, "orders, comma separated");
    explore->add_option("--corpus", cfg.corpus_path, "corpus file (name = expr lines)");
    explore->add_option("--grid-step", cfg.grid_step, "grid step for suite estimates");
    add_common(explore);

    std::vector<const char*> argv;
    argv.push_back("rough-stat");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        CommandOutput result;
        if (density->parsed()) {
            cfg.subcommand = "density";
            result = run_density(cfg, err);
        } else if (converge->parsed()) {
            cfg.subcommand = "converge";
            result = run_converge(cfg, err);
        } else if (limitset->parsed()) {
            cfg.subcommand = "limitset";
            result = run_limitset(cfg, err);
        } else if (cluster->parsed()) {
            cfg.subcommand = "cluster";
            result = run_cluster(cfg, err);
        } else if (bounded->parsed()) {
            cfg.subcommand = "bounded";
            result = run_bounded(cfg, err);
        } else if (project->parsed()) {
            cfg.subcommand = "project";
            result = run_project(cfg, err);
        } else if (verify->parsed()) {
            cfg.subcommand = "verify";
            result = run_verify(cfg, err);
        } else if (explore->parsed()) {
            cfg.subcommand = "explore-diameter";
            result = run_explore_diameter(cfg, r_list_text, alpha_list_text, err);
        } else {
            err << "error: no subcommand\n";
            return kUsage;
        }
        emit(cfg, result, out, err);
        return result.exit_code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (byte offset " << e.offset << ")\n";
        return kUsage;
    } catch (const EvalError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace roughstat
