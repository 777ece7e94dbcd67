// Command-line front end: memory estimation, cointegration diagnostics,
// sequential rank procedures, critical-value simulation, and dispersion
// series, over delimited panel files. Reports render as text, JSON
// (schema: {command, config, results, warnings}), or CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fracrank/chisq.hpp"
#include "fracrank/critval.hpp"
#include "fracrank/csv.hpp"
#include "fracrank/errors.hpp"
#include "fracrank/hualde.hpp"
#include "fracrank/nielsen.hpp"
#include "fracrank/panel.hpp"
#include "fracrank/report.hpp"
#include "fracrank/whittle.hpp"
#include "fracrank/xstar.hpp"

namespace {

using fracrank::format_g6;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    std::string input;
    std::string transform = "none";
    std::string format = "text";
    std::string output;  // empty = stdout
    std::string delimiter = ",";
    std::string time_column = "auto";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    if (needs_input)
        cmd->add_option("-i,--input", o.input, "input panel file")->required();
    cmd->add_option("--transform", o.transform, "none | log | log-diff")
        ->check(CLI::IsMember({"none", "log", "log-diff"}));
    cmd->add_option("-f,--format", o.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("-o,--output", o.output, "write the report here instead of stdout");
    cmd->add_option("--delimiter", o.delimiter, "input field delimiter (default ,)");
    cmd->add_option("--time-column", o.time_column,
                    "auto | yes | no: first input column holds period labels")
        ->check(CLI::IsMember({"auto", "yes", "no"}));
}

fracrank::Panel load_panel(const CommonOpts& o) {
    fracrank::CsvOptions opts;
    if (o.delimiter.size() != 1)
        throw std::invalid_argument("delimiter must be a single character");
    opts.delimiter = o.delimiter[0];
    if (o.time_column == "yes")
        opts.time_column = fracrank::TimeColumn::Yes;
    else if (o.time_column == "no")
        opts.time_column = fracrank::TimeColumn::No;
    fracrank::Panel panel = fracrank::load_csv(o.input, opts);
    if (o.transform == "log") return fracrank::log_panel(panel);
    if (o.transform == "log-diff") return fracrank::log_and_diff(panel);
    return panel;
}

void emit(const CommonOpts& o, const json& report, const std::string& rendered) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open '" + o.output + "' for writing");
        out = &file;
    }
    if (o.format == "json")
        *out << report.dump(2) << '\n';
    else
        *out << rendered;
}

json config_echo(const CommonOpts& o) {
    return json{{"input", o.input},
                {"transform", o.transform},
                {"format", o.format},
                {"output", o.output}};
}

std::string warnings_block(const std::vector<std::string>& warnings) {
    std::string s;
    for (const auto& w : warnings) s += "warning: " + w + "\n";
    return s;
}

// ---------------------------------------------------------------------------
// memory: d-hat by series x bandwidth
// ---------------------------------------------------------------------------

int run_memory(const CommonOpts& o, const std::vector<std::size_t>& bandwidths,
               const std::string& method, const std::string& mean_handling) {
    const auto panel = load_panel(o);
    const auto mm = method == "elw" ? fracrank::MemoryMethod::ExactLocalWhittle
                                    : fracrank::MemoryMethod::LocalWhittle;
    fracrank::MeanHandling mh = fracrank::MeanHandling::Demean;
    if (mean_handling == "none") mh = fracrank::MeanHandling::None;
    if (mean_handling == "first-obs") mh = fracrank::MeanHandling::FirstObs;

    std::vector<std::vector<fracrank::MemoryEstimate>> by_m;
    for (std::size_t m : bandwidths)
        by_m.push_back(fracrank::panel_memory(panel, m, mm, mh));

    std::vector<std::string> warnings;
    json rows = json::array();
    for (std::size_t i = 0; i < panel.labels().size(); ++i) {
        json row{{"series", panel.labels()[i]}};
        json ests = json::array();
        for (std::size_t b = 0; b < bandwidths.size(); ++b) {
            ests.push_back(by_m[b][i].d_hat);
            if (by_m[b][i].at_boundary)
                warnings.push_back("estimate for '" + panel.labels()[i] + "' at m=" +
                                   std::to_string(bandwidths[b]) +
                                   " sits at a search bound");
        }
        row["d_hat"] = ests;
        rows.push_back(row);
    }
    json results{{"bandwidths", bandwidths},
                 {"method", method},
                 {"estimates", rows}};
    json std_errs = json::array();
    for (std::size_t m : bandwidths) std_errs.push_back(1.0 / (2.0 * std::sqrt(double(m))));
    results["std_errs"] = std_errs;

    std::ostringstream text;
    std::ostringstream csv;
    text << "Memory estimates (" << (mm == fracrank::MemoryMethod::LocalWhittle
                                         ? "local Whittle"
                                         : "exact local Whittle")
         << ")\n";
    text << "series";
    csv << "series";
    for (std::size_t m : bandwidths) {
        text << "\tm:" << m;
        csv << ",m:" << m;
    }
    text << '\n';
    csv << '\n';
    for (std::size_t i = 0; i < panel.labels().size(); ++i) {
        text << panel.labels()[i];
        csv << panel.labels()[i];
        for (std::size_t b = 0; b < bandwidths.size(); ++b) {
            text << '\t' << format_g6(by_m[b][i].d_hat);
            csv << ',' << format_g6(by_m[b][i].d_hat);
        }
        text << '\n';
        csv << '\n';
    }
    text << warnings_block(warnings);

    json cfg = config_echo(o);
    cfg["bandwidths"] = bandwidths;
    cfg["method"] = method;
    cfg["mean_handling"] = mean_handling;
    const json rep = fracrank::make_report("memory", cfg, results, warnings);
    emit(o, rep, o.format == "csv" ? csv.str() : text.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// xstar: one diagnostic on selected columns
// ---------------------------------------------------------------------------

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

int run_xstar(const CommonOpts& o, std::size_t m, const std::vector<std::string>& columns,
              double alpha) {
    fracrank::Panel panel = load_panel(o);
    if (!columns.empty()) {
        std::vector<Eigen::Index> idx;
        for (const auto& label : columns) idx.push_back(panel.index_of(label));
        panel = panel.select(idx);
    }
    const auto res = fracrank::xstar(panel, m);
    const double cv = fracrank::chi2_1_critical_value(alpha);

    json results{{"x_star", res.x_star},
                 {"s_star", res.s_star},
                 {"d_tilde", res.d_tilde},
                 {"d_hats", res.d_hats},
                 {"m", res.m},
                 {"p_value", res.p_value},
                 {"alpha", alpha},
                 {"critical_value", cv},
                 {"reject_non_cointegration", res.x_star > cv},
                 {"G", matrix_to_json(res.G)},
                 {"H", matrix_to_json(res.H)},
                 {"R", matrix_to_json(res.R)},
                 {"D", std::vector<double>(res.D.data(), res.D.data() + res.D.size())},
                 {"weights", std::vector<double>(res.weights.data(),
                                                 res.weights.data() + res.weights.size())},
                 {"discarded_imag", res.discarded_imag}};

    std::ostringstream text;
    text << "X* non-cointegration diagnostic\n";
    text << "columns:";
    for (const auto& l : panel.labels()) text << ' ' << l;
    text << "\nm = " << m << "\n";
    text << "d_hats =";
    for (double d : res.d_hats) text << ' ' << format_g6(d);
    text << "\nd_tilde = " << format_g6(res.d_tilde) << "\n";
    text << "s* = " << format_g6(res.s_star) << "\n";
    text << "X* = " << format_g6(res.x_star) << "  (chi2_1 critical value at "
         << format_g6(alpha) << ": " << format_g6(cv) << ")\n";
    text << "p-value = " << format_g6(res.p_value) << "\n";
    text << (res.x_star > cv ? "reject non-cointegration\n"
                             : "no evidence against non-cointegration\n");
    text << warnings_block(res.warnings);

    std::ostringstream csv;
    csv << "key,value\n";
    csv << "x_star," << format_g6(res.x_star) << "\n";
    csv << "s_star," << format_g6(res.s_star) << "\n";
    csv << "d_tilde," << format_g6(res.d_tilde) << "\n";
    csv << "p_value," << format_g6(res.p_value) << "\n";

    json cfg = config_echo(o);
    cfg["bandwidth"] = m;
    cfg["columns"] = columns;
    cfg["alpha"] = alpha;
    const json rep = fracrank::make_report("xstar", cfg, results, res.warnings);
    emit(o, rep, o.format == "csv" ? csv.str() : text.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// rank-hualde
// ---------------------------------------------------------------------------

int run_rank_hualde(const CommonOpts& o, std::size_t m, double alpha,
                    std::optional<double> threshold) {
    const auto panel = load_panel(o);
    const auto trace = fracrank::estimate_rank_hualde(panel, m, alpha, threshold);

    json steps = json::array();
    for (const auto& s : trace.steps) {
        json cands = json::array();
        for (const auto& [label, stat] : s.candidate_stats) {
            json c{{"series", label}};
            if (std::isnan(stat))
                c["x_star"] = nullptr;
            else
                c["x_star"] = stat;
            cands.push_back(c);
        }
        steps.push_back(json{{"step", s.step_index},
                             {"ct", s.ct_labels},
                             {"candidates", cands},
                             {"min_stat_series", s.min_stat_label},
                             {"rejected", s.rejected},
                             {"failures", s.failures}});
    }
    json results{{"r_hat", trace.r_hat},
                 {"alpha", trace.alpha},
                 {"critical_value", trace.critical_value},
                 {"m", trace.m},
                 {"d_hats", trace.d_hats},
                 {"series", trace.labels},
                 {"steps", steps}};

    // Text: one table per step in the shape of the published traces, CT cells
    // marked, candidate statistics elsewhere.
    std::ostringstream text;
    text << "Sequential cointegration rank procedure: m = " << m
         << ", alpha = " << format_g6(alpha)
         << ", critical value = " << format_g6(trace.critical_value) << "\n";
    text << "step-1 memory estimates:";
    for (std::size_t i = 0; i < trace.labels.size(); ++i)
        text << ' ' << trace.labels[i] << '=' << format_g6(trace.d_hats[i]);
    text << '\n';
    std::ostringstream csv;
    csv << "step,series,x_star,is_ct,rejected\n";
    for (const auto& s : trace.steps) {
        text << "Step " << s.step_index << " (CT:";
        for (const auto& l : s.ct_labels) text << ' ' << l;
        text << ")\n";
        for (const auto& label : trace.labels) {
            const bool is_ct =
                std::find(s.ct_labels.begin(), s.ct_labels.end(), label) !=
                s.ct_labels.end();
            text << "  " << label << '\t';
            if (is_ct) {
                text << "CT\n";
                csv << s.step_index << ',' << label << ",,1," << (s.rejected ? 1 : 0)
                    << '\n';
                continue;
            }
            const auto it =
                std::find_if(s.candidate_stats.begin(), s.candidate_stats.end(),
                             [&](const auto& kv) { return kv.first == label; });
            if (it == s.candidate_stats.end()) {
                text << "-\n";
            } else if (std::isnan(it->second)) {
                text << "failed\n";
                csv << s.step_index << ',' << label << ",,0," << (s.rejected ? 1 : 0)
                    << '\n';
            } else {
                text << format_g6(it->second) << '\n';
                csv << s.step_index << ',' << label << ',' << format_g6(it->second)
                    << ",0," << (s.rejected ? 1 : 0) << '\n';
            }
        }
        text << "  decision: " << (s.rejected ? "rejected" : "not rejected") << "\n";
    }
    text << "estimated rank r = " << trace.r_hat << "\n";

    json cfg = config_echo(o);
    cfg["bandwidth"] = m;
    cfg["alpha"] = alpha;
    const json rep = fracrank::make_report("rank-hualde", cfg, results);
    emit(o, rep, o.format == "csv" ? csv.str() : text.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// rank-nielsen
// ---------------------------------------------------------------------------

int run_rank_nielsen(const CommonOpts& o, double d1, const std::string& det_case,
                     double xi, const std::string& cv_table_path, std::size_t reps,
                     std::uint64_t seed, unsigned workers) {
    const auto panel = load_panel(o);
    const auto det = fracrank::det_case_from_string(det_case);

    fracrank::CriticalValueTable table;
    std::vector<std::string> warnings;
    if (!cv_table_path.empty()) {
        table = fracrank::read_cv_table(cv_table_path);
        if (table.T != static_cast<std::size_t>(panel.rows()))
            warnings.push_back("cv table was simulated for T=" + std::to_string(table.T) +
                               " but the panel has T=" + std::to_string(panel.rows()) +
                               "; critical values are regime-specific");
        if (std::abs(table.d1 - d1) > 1e-12)
            warnings.push_back("cv table d1 differs from the requested d1");
    } else {
        fracrank::CvSimConfig cfg;
        cfg.T = static_cast<std::size_t>(panel.rows());
        cfg.max_dim = static_cast<std::size_t>(panel.cols());
        cfg.d1 = d1;
        cfg.cases = {det};
        cfg.levels = {xi};
        cfg.reps = reps;
        cfg.seed = seed;
        cfg.workers = workers;
        table = fracrank::simulate_cv_table(cfg);
        warnings.push_back("no --cv-table given; simulated " + std::to_string(reps) +
                           " replications with seed " + std::to_string(seed));
    }

    const auto res = fracrank::estimate_rank_nielsen(panel, d1, det, table, xi);

    json results{{"eigenvalues", res.eigenvalues},
                 {"lambda_by_r0", res.lambda_by_r0},
                 {"critical_values", res.critical_values},
                 {"d1", res.d1},
                 {"det_case", fracrank::to_string(res.det_case)},
                 {"xi", res.xi},
                 {"r_hat", res.r_hat},
                 {"ceiling", res.ceiling}};
    json rejects = json::array();
    for (bool b : res.reject) rejects.push_back(b);
    results["reject"] = rejects;

    std::ostringstream text;
    std::ostringstream csv;
    text << "Variance-ratio cointegration rank test: d1 = " << format_g6(d1)
         << ", case = " << det_case << ", xi = " << format_g6(xi) << "\n";
    text << "r0\tp-r\tLambda\tCV\tdecision\n";
    csv << "r0,p_r,lambda,cv,reject\n";
    for (std::size_t r0 = 0; r0 < res.p; ++r0) {
        const std::size_t pr = res.p - r0;
        text << r0 << '\t' << pr << '\t' << format_g6(res.lambda_by_r0[r0]) << '\t';
        if (r0 < res.reject.size()) {
            text << format_g6(res.critical_values[r0]) << '\t'
                 << (res.reject[r0] ? "reject" : "not rejected") << '\n';
            csv << r0 << ',' << pr << ',' << format_g6(res.lambda_by_r0[r0]) << ','
                << format_g6(res.critical_values[r0]) << ',' << (res.reject[r0] ? 1 : 0)
                << '\n';
        } else {
            text << "-\t(not tested)\n";
            csv << r0 << ',' << pr << ',' << format_g6(res.lambda_by_r0[r0]) << ",,\n";
        }
    }
    text << "estimated rank r = " << res.r_hat;
    if (res.ceiling) text << " (every candidate rejected; capped at p-1)";
    text << "\n" << warnings_block(warnings);

    json cfg = config_echo(o);
    cfg["d1"] = d1;
    cfg["det_case"] = det_case;
    cfg["xi"] = xi;
    cfg["cv_table"] = cv_table_path;
    const json rep = fracrank::make_report("rank-nielsen", cfg, results, warnings);
    emit(o, rep, o.format == "csv" ? csv.str() : text.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate-cv
// ---------------------------------------------------------------------------

int run_simulate_cv(const CommonOpts& o, std::size_t T, std::size_t max_dim, double d1,
                    const std::vector<std::string>& cases,
                    const std::vector<double>& levels, std::size_t reps,
                    std::uint64_t seed, unsigned workers, const std::string& table_out) {
    fracrank::CvSimConfig cfg;
    cfg.T = T;
    cfg.max_dim = max_dim;
    cfg.d1 = d1;
    cfg.cases.clear();
    for (const auto& c : cases) cfg.cases.push_back(fracrank::det_case_from_string(c));
    cfg.levels = levels;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.workers = workers;

    const auto table = fracrank::simulate_cv_table(cfg);
    fracrank::write_cv_table(table, table_out);
    const auto violations = table.monotonicity_violations();

    json results{{"cells", table.cells.size()},
                 {"table_file", table_out},
                 {"monotonicity_violations", violations}};
    std::ostringstream text;
    text << "Simulated " << table.cells.size() << " critical values (T=" << T
         << ", d1=" << format_g6(d1) << ", reps=" << reps << ", seed=" << seed
         << ") -> " << table_out << "\n";
    std::ostringstream tbl;
    fracrank::write_cv_table(table, tbl);
    text << tbl.str();
    for (const auto& v : violations) text << "warning: " << v << '\n';

    json cfg_echo{{"T", T},          {"max_dim", max_dim}, {"d1", d1},
                  {"cases", cases},  {"levels", levels},   {"reps", reps},
                  {"seed", seed},    {"workers", workers}, {"output", table_out},
                  {"format", o.format}};
    const json rep = fracrank::make_report("simulate-cv", cfg_echo, results, violations);
    emit(o, rep, o.format == "csv" ? tbl.str() : text.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sigma
// ---------------------------------------------------------------------------

int run_sigma(const CommonOpts& o) {
    const auto panel = load_panel(o);
    const auto disp = fracrank::sigma_dispersion(panel);

    json results{{"sigma", disp}};
    if (panel.has_time_index()) results["time"] = panel.time_index();

    std::ostringstream csv;
    csv << "time,sigma\n";
    for (std::size_t t = 0; t < disp.size(); ++t) {
        if (panel.has_time_index())
            csv << panel.time_index()[t];
        else
            csv << (t + 1);
        csv << ',' << format_g6(disp[t]) << '\n';
    }
    std::ostringstream text;
    text << "Cross-sectional dispersion (" << disp.size() << " periods)\n" << csv.str();

    const json rep = fracrank::make_report("sigma", config_echo(o), results);
    emit(o, rep, o.format == "csv" ? csv.str() : text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"long-memory estimation and fractional cointegration rank testing"};
    app.require_subcommand(1);

    // memory
    CommonOpts mem_o;
    std::vector<std::size_t> mem_bandwidths;
    std::string mem_method = "lw";
    std::string mem_mh = "demean";
    auto* mem = app.add_subcommand("memory", "memory parameters by series and bandwidth");
    add_common(mem, mem_o);
    mem->add_option("-m,--bandwidths", mem_bandwidths, "bandwidth list")
        ->required()
        ->delimiter(',');
    mem->add_option("--method", mem_method, "lw | elw")
        ->check(CLI::IsMember({"lw", "elw"}));
    mem->add_option("--mean-handling", mem_mh, "none | demean | first-obs (elw only)")
        ->check(CLI::IsMember({"none", "demean", "first-obs"}));

    // xstar
    CommonOpts xs_o;
    std::size_t xs_m = 0;
    std::vector<std::string> xs_columns;
    double xs_alpha = 0.05;
    auto* xs = app.add_subcommand("xstar", "X* non-cointegration diagnostic");
    add_common(xs, xs_o);
    xs->add_option("-m,--bandwidth", xs_m, "bandwidth")->required();
    xs->add_option("--columns", xs_columns, "subset of series labels")->delimiter(',');
    xs->add_option("--alpha", xs_alpha, "significance level");

    // rank-hualde
    CommonOpts rh_o;
    std::size_t rh_m = 0;
    double rh_alpha = 0.05;
    double rh_threshold = -1.0;
    auto* rh = app.add_subcommand("rank-hualde", "sequential common-trend rank procedure");
    add_common(rh, rh_o);
    rh->add_option("-m,--bandwidth", rh_m, "bandwidth")->required();
    rh->add_option("--alpha", rh_alpha, "per-test significance level");
    rh->add_option("--threshold", rh_threshold,
                   "custom per-test critical value (overrides alpha)");

    // rank-nielsen
    CommonOpts rn_o;
    double rn_d1 = 0.1;
    std::string rn_case = "none";
    double rn_xi = 0.05;
    std::string rn_table;
    std::size_t rn_reps = 20000;
    std::uint64_t rn_seed = 12345;
    unsigned rn_workers = 1;
    auto* rn = app.add_subcommand("rank-nielsen", "variance-ratio rank test");
    add_common(rn, rn_o);
    rn->add_option("--d1", rn_d1, "cumulation order (default 0.1)");
    rn->add_option("--det-case", rn_case, "none | const | trend")
        ->check(CLI::IsMember({"none", "const", "trend"}));
    rn->add_option("--xi", rn_xi, "significance level");
    rn->add_option("--cv-table", rn_table, "critical-value table file");
    rn->add_option("--reps", rn_reps, "replications when simulating the table");
    rn->add_option("--seed", rn_seed, "seed when simulating the table");
    rn->add_option("--workers", rn_workers, "threads when simulating the table");

    // simulate-cv
    CommonOpts sc_o;
    std::size_t sc_T = 0, sc_max_dim = 0, sc_reps = 0;
    double sc_d1 = 0.1;
    std::vector<std::string> sc_cases{"none", "const", "trend"};
    std::vector<double> sc_levels{0.10, 0.05, 0.01};
    std::uint64_t sc_seed = 0;
    unsigned sc_workers = 1;
    std::string sc_out;
    auto* sc = app.add_subcommand("simulate-cv", "simulate a critical-value table");
    sc->add_option("-T,--sample-size", sc_T, "sample size")->required();
    sc->add_option("--max-dim", sc_max_dim, "largest p-r")->required();
    sc->add_option("--d1", sc_d1, "cumulation order (default 0.1)");
    sc->add_option("--cases", sc_cases, "deterministic cases")->delimiter(',');
    sc->add_option("--levels", sc_levels, "xi levels")->delimiter(',');
    sc->add_option("--reps", sc_reps, "replications")->required();
    sc->add_option("--seed", sc_seed, "master seed");
    sc->add_option("--workers", sc_workers, "worker threads");
    sc->add_option("-o,--output", sc_out, "table file to write")->required();
    sc->add_option("-f,--format", sc_o.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // sigma
    CommonOpts sg_o;
    auto* sg = app.add_subcommand("sigma", "cross-sectional dispersion by period");
    add_common(sg, sg_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (mem->parsed()) return run_memory(mem_o, mem_bandwidths, mem_method, mem_mh);
        if (xs->parsed()) return run_xstar(xs_o, xs_m, xs_columns, xs_alpha);
        if (rh->parsed())
            return run_rank_hualde(rh_o, rh_m, rh_alpha,
                                   rh_threshold > 0.0
                                       ? std::optional<double>(rh_threshold)
                                       : std::nullopt);
        if (rn->parsed())
            return run_rank_nielsen(rn_o, rn_d1, rn_case, rn_xi, rn_table, rn_reps,
                                    rn_seed, rn_workers);
        if (sc->parsed())
            return run_simulate_cv(sc_o, sc_T, sc_max_dim, sc_d1, sc_cases, sc_levels,
                                   sc_reps, sc_seed, sc_workers, sc_out);
        if (sg->parsed()) return run_sigma(sg_o);
    } catch (const fracrank::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
