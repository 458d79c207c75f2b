// Command-line driver: ranking, statistics, epidemic/cascade evaluation and
// constraint-efficiency reports over edge-list graphs.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ske/errors.hpp"
#include "ske/exec.hpp"
#include "ske/experiment.hpp"
#include "ske/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::uint64_t rng_seed = 1;
    int threads = 0;
    std::string format = "csv";
    bool quiet = false;
    std::string output; // empty -> stdout
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
    } else {
        ske::write_text_file(g.output, text);
    }
}

void warn(const GlobalOpts& g, const std::string& msg) {
    if (!g.quiet) std::cerr << "warning: " << msg << '\n';
}

ske::Graph load_graph(const GlobalOpts& g, const std::string& path,
                      const ske::LoadOptions& options = {}) {
    ske::LoadReport report;
    auto graph = ske::load_edge_list_file(path, options, &report);
    if (report.self_loops_dropped > 0)
        warn(g, "dropped " + std::to_string(report.self_loops_dropped) +
                    " self-loop line(s) in " + path);
    if (report.duplicate_edges_dropped > 0)
        warn(g, "dropped " + std::to_string(report.duplicate_edges_dropped) +
                    " duplicate edge(s) in " + path);
    if (report.isolated_nodes_dropped > 0)
        warn(g, "dropped " + std::to_string(report.isolated_nodes_dropped) +
                    " isolated node(s) in " + path);
    if (!g.quiet)
        std::cerr << "loaded " << path << ": " << report.nodes << " nodes, "
                  << report.edges << " edges\n";
    return graph;
}

ske::Method require_method(const std::string& name) {
    auto m = ske::parse_method(name);
    if (!m)
        throw ske::input_error("unknown method \"" + name +
                               "\" (expected sk_e|sd|ks_entropy|dc|bc|cc|kshell|ci)");
    return *m;
}

json json_ranking(const std::vector<std::string>& labels,
                  const std::vector<int>& ranking, const std::vector<double>& scores) {
    json rows = json::array();
    for (size_t r = 0; r < ranking.size(); ++r) {
        rows.push_back({{"rank", r + 1},
                        {"node_label", labels[ranking[r]]},
                        {"zeta", scores[ranking[r]]}});
    }
    return rows;
}

json json_matrix(const ske::SquareMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json json_decision(const ske::DecisionMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int l = 0; l < m.cols; ++l) row.push_back(m.at(i, l));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string graph_stem(const std::string& path) {
    return fs::path(path).stem().string();
}

// ---- subcommand runners ----

void run_stats(const GlobalOpts& g, const std::string& path) {
    const auto graph = load_graph(g, path);
    const auto s = ske::stats(graph);
    if (g.format == "json") {
        json j{{"n", s.n},
               {"m", s.m},
               {"mean_degree", s.mean_degree},
               {"max_degree", s.max_degree},
               {"mean_clustering", s.mean_clustering},
               {"mean_path_length",
                s.mean_path_length ? json(*s.mean_path_length) : json(nullptr)},
               {"mean_square_degree", s.mean_square_degree},
               {"component_count", s.component_count}};
        emit(g, j.dump(2) + "\n");
    } else {
        emit(g, ske::csv_stats(s));
    }
}

void run_rank(const GlobalOpts& g, const std::string& graph_path,
              const std::string& matrix_path, const std::string& method_name,
              double w_global, int ci_radius, const std::string& weights_csv,
              bool emit_matrices) {
    std::vector<std::string> labels;
    std::vector<double> scores;
    std::vector<int> ranking;
    std::optional<ske::FusionResult> fusion;

    if (!matrix_path.empty()) {
        const auto mf = ske::read_decision_matrix_csv_file(matrix_path);
        ske::Weights w = ske::Weights::local_global(w_global);
        if (!weights_csv.empty()) {
            std::vector<double> ws;
            std::stringstream ss(weights_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) ws.push_back(std::stod(tok));
            w = ske::Weights::of(ws);
        } else if (mf.matrix.cols != 2) {
            throw ske::input_error(
                "matrix has " + std::to_string(mf.matrix.cols) +
                " criteria; pass --weights w1,w2,... to weight them");
        }
        fusion = ske::fuse(mf.matrix, w, {.keep_matrices = emit_matrices});
        labels = mf.labels;
        scores = fusion->net_dominance;
        ranking = fusion->ranking;
    } else {
        const auto graph = load_graph(g, graph_path);
        labels = graph.labels();
        const auto method = require_method(method_name);
        if (method == ske::Method::sk_e) {
            fusion = ske::sk_e(graph, w_global, {.keep_matrices = emit_matrices});
            scores = fusion->net_dominance;
            ranking = fusion->ranking;
        } else {
            if (emit_matrices)
                throw ske::input_error("--emit-matrices requires method sk_e or --matrix");
            scores = ske::method_scores(graph, method,
                                        {.w_global = w_global, .ci_radius = ci_radius});
            ranking = ske::ranking_from_scores(scores);
        }
    }

    if (emit_matrices || g.format == "json") {
        json j{{"method", matrix_path.empty() ? method_name : "matrix"},
               {"ranking", json_ranking(labels, ranking, scores)}};
        if (fusion && emit_matrices) {
            j["normalized"] = json_decision(fusion->normalized);
            j["weighted"] = json_decision(fusion->weighted);
            j["harmony"] = json_matrix(*fusion->harmony);
            j["disharmony"] = json_matrix(*fusion->disharmony);
            j["dominance"] = json_matrix(*fusion->dominance);
            j["zeta"] = fusion->net_dominance;
        }
        emit(g, j.dump(2) + "\n");
    } else {
        emit(g, ske::csv_ranking(labels, ranking, scores));
    }
}

void run_metrics(const GlobalOpts& g, const std::string& path,
                 const std::vector<std::string>& methods, double w_global,
                 int ci_radius) {
    const auto graph = load_graph(g, path);
    std::vector<ske::MetricVector> out;
    for (const auto& name : methods) {
        const auto method = require_method(name);
        ske::MetricVector mv{std::string(ske::method_name(method)),
                             ske::method_scores(graph, method,
                                                {.w_global = w_global,
                                                 .ci_radius = ci_radius})};
        out.push_back(std::move(mv));
    }
    emit(g, ske::csv_metrics(graph.labels(), out));
}

void run_sweep(const GlobalOpts& g, const std::string& path, double step, int days,
               int runs, int k, std::optional<double> alpha, double beta) {
    const auto graph = load_graph(g, path);
    ske::SirParams base;
    base.alpha = alpha ? *alpha : ske::default_alpha(graph);
    base.beta = beta;
    base.days = days;
    base.runs = runs;
    base.rng_seed = g.rng_seed;
    const auto sweep = ske::weight_sweep(graph, step, base, k);
    if (g.format == "json") {
        json rows = json::array();
        for (const auto& r : sweep.rows)
            rows.push_back({{"w_global", r.w_global},
                            {"f_final_mean", r.f_final_mean},
                            {"f_final_std", r.f_final_std}});
        emit(g, json{{"rows", rows}, {"argmax_w", sweep.argmax_w}}.dump(2) + "\n");
    } else {
        emit(g, ske::csv_sweep(sweep));
    }
    if (!g.quiet) std::cerr << "argmax_w = " << sweep.argmax_w << '\n';
}

void run_sir(const GlobalOpts& g, const std::string& path,
             const std::string& method_name, int k, int days, int runs,
             std::optional<double> alpha, double beta, double w_global,
             int ci_radius) {
    const auto graph = load_graph(g, path);
    const auto method = require_method(method_name);
    const auto ranking = ske::method_ranking(
        graph, method, {.w_global = w_global, .ci_radius = ci_radius});
    if (k < 1 || k > graph.node_count())
        throw ske::input_error("--k must lie in [1, n]");
    ske::SirParams params;
    params.alpha = alpha ? *alpha : ske::default_alpha(graph);
    params.beta = beta;
    params.days = days;
    params.runs = runs;
    params.rng_seed = g.rng_seed;
    params.seeds.assign(ranking.begin(), ranking.begin() + k);
    const auto trace = ske::sir_monte_carlo(graph, params);
    if (g.format == "json") {
        emit(g, json{{"method", method_name},
                     {"alpha", params.alpha},
                     {"beta", params.beta},
                     {"f_mean", trace.f_mean},
                     {"f_std", trace.f_std},
                     {"runs", trace.runs}}
                        .dump(2) +
                    "\n");
    } else {
        emit(g, ske::csv_trace(trace));
    }
}

void run_ic(const GlobalOpts& g, const std::string& path,
            const std::string& method_name, int k, double p_min, double p_max,
            double p_step, int runs, double w_global, int ci_radius) {
    const auto graph = load_graph(g, path);
    const auto method = require_method(method_name);
    const auto ranking = ske::method_ranking(
        graph, method, {.w_global = w_global, .ci_radius = ci_radius});
    if (k < 1 || k > graph.node_count())
        throw ske::input_error("--k must lie in [1, n]");
    if (!(p_step > 0.0) || p_max < p_min)
        throw ske::input_error("bad probability range");
    std::vector<int> seeds(ranking.begin(), ranking.begin() + k);
    std::vector<double> grid;
    std::vector<ske::IcResult> results;
    for (double p = p_min; p <= p_max + p_step * 0.5; p += p_step) {
        const double pc = std::min(p, 1.0);
        grid.push_back(pc);
        results.push_back(
            ske::ic_monte_carlo(graph, ske::IcParams{pc, seeds, runs, g.rng_seed}));
    }
    if (g.format == "json") {
        json rows = json::array();
        for (size_t i = 0; i < grid.size(); ++i)
            rows.push_back({{"p", grid[i]},
                            {"active_mean", results[i].active_mean},
                            {"active_std", results[i].active_std}});
        emit(g, json{{"method", method_name}, {"rows", rows}}.dump(2) + "\n");
    } else {
        emit(g, ske::csv_ic_sweep(grid, results));
    }
}

void run_constraint(const GlobalOpts& g, const std::string& path,
                    const std::string& method_name, double frac, int q_max_flag,
                    double w_global, int ci_radius) {
    const auto graph = load_graph(g, path);
    const auto method = require_method(method_name);
    const auto ranking = ske::method_ranking(
        graph, method, {.w_global = w_global, .ci_radius = ci_radius});
    int q_max = q_max_flag;
    if (q_max <= 0)
        q_max = std::max(1, static_cast<int>(std::ceil(frac * graph.node_count())));
    const auto report = ske::constraint_efficiency(graph, ranking, q_max);
    if (g.format == "json") {
        json per_q = json::array();
        for (const auto& [q, mu] : report.per_q)
            per_q.push_back({{"Q", q}, {"mu1", mu}, {"inv_mu1", 1.0 / mu}});
        emit(g, json{{"method", method_name},
                     {"q_max", report.q_max},
                     {"per_q", per_q},
                     {"P", report.p_value}}
                        .dump(2) +
                    "\n");
    } else {
        emit(g, ske::csv_control(report));
    }
}

void run_generate(const GlobalOpts& g, const std::string& model, int n,
                  int m_attach, double p, std::uint64_t seed) {
    ske::Graph graph = model == "ba" ? ske::generate_barabasi_albert(n, m_attach, seed)
                                     : ske::generate_erdos_renyi(n, p, seed);
    std::string out;
    for (int v = 0; v < graph.node_count(); ++v) {
        if (graph.degree(v) == 0) {
            // a self-loop line keeps the label alive; the loader drops the
            // loop and keeps the isolated node
            out += graph.label(v) + ' ' + graph.label(v) + '\n';
            continue;
        }
        for (int u : graph.neighbors(v))
            if (v < u) out += graph.label(v) + ' ' + graph.label(u) + '\n';
    }
    emit(g, out);
}

void run_compare(const GlobalOpts& g, const std::string& config_path,
                 ske::ExperimentConfig cfg) {
    if (cfg.graphs.empty()) throw ske::input_error("config: no graphs given");
    fs::create_directories(cfg.out_dir);

    struct PerGraph {
        std::string name;
        ske::ConstraintComparison constraint;
    };
    std::vector<PerGraph> constraint_rows;
    std::string weights_csv = "network,w_global\n";

    for (const auto& path : cfg.graphs) {
        const auto name = graph_stem(path);
        const auto graph = load_graph(g, path);
        const auto dir = fs::path(cfg.out_dir);

        ske::write_text_file((dir / ("stats_" + name + ".csv")).string(),
                             ske::csv_stats(ske::stats(graph)));

        ske::ExperimentConfig local = cfg;
        auto wants = [&](const std::string& e) {
            return std::find(cfg.experiments.begin(), cfg.experiments.end(), e) !=
                   cfg.experiments.end();
        };

        if (cfg.sweep_w || wants("sweep")) {
            ske::SirParams base;
            base.alpha = cfg.alpha ? *cfg.alpha : ske::default_alpha(graph);
            base.beta = cfg.beta;
            base.days = cfg.sweep_days;
            base.runs = cfg.sweep_runs;
            base.rng_seed = cfg.rng_seed;
            const auto sweep =
                ske::weight_sweep(graph, cfg.sweep_step, base, cfg.seed_count);
            ske::write_text_file((dir / ("sweep_" + name + ".csv")).string(),
                                 ske::csv_sweep(sweep));
            if (cfg.sweep_w) local.w_global = sweep.argmax_w;
        }
        weights_csv += name + ',' + ske::fmt_double(local.w_global) + '\n';

        if (wants("sir")) {
            const auto cmp = ske::compare_methods_sir(graph, local);
            ske::write_text_file((dir / ("sir_" + name + ".csv")).string(),
                                 ske::csv_sir_comparison(cmp));
        }
        if (wants("ic")) {
            const auto cmp = ske::compare_methods_ic(graph, local);
            ske::write_text_file((dir / ("ic_" + name + ".csv")).string(),
                                 ske::csv_ic_comparison(cmp));
        }
        if (wants("constraint")) {
            constraint_rows.push_back(
                {name, ske::compare_constraint(graph, local)});
        }
    }

    ske::write_text_file((fs::path(cfg.out_dir) / "weights.csv").string(),
                         weights_csv);

    if (!constraint_rows.empty()) {
        const auto& fracs = constraint_rows.front().constraint.fracs;
        for (size_t fi = 0; fi < fracs.size(); ++fi) {
            std::vector<std::string> names;
            std::vector<std::vector<double>> values;
            for (const auto& row : constraint_rows) {
                names.push_back(row.name);
                values.push_back(row.constraint.p_values[fi]);
            }
            std::string frac_tag = ske::fmt_double(fracs[fi]);
            std::erase(frac_tag, '.');
            ske::write_text_file((fs::path(cfg.out_dir) /
                                  ("constraint_" + frac_tag + ".csv"))
                                     .string(),
                                 ske::csv_constraint_table(
                                     names, constraint_rows.front().constraint.methods,
                                     values));
        }
    }
    if (!g.quiet)
        std::cerr << "compare(" << config_path << "): outputs in " << cfg.out_dir
                  << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Influential-node ranking and spreading evaluation toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--rng-seed", g.rng_seed, "Base RNG seed")->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP thread cap (0 = runtime default)");
    app.add_option("--format", g.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Suppress warnings and progress notes");
    app.add_option("-o,--output", g.output, "Output file (default: stdout)");

    // stats
    std::string stats_graph;
    auto* c_stats = app.add_subcommand("stats", "Topology statistics of a graph");
    c_stats->add_option("graph", stats_graph, "Edge-list file")->required();

    // rank
    std::string rank_graph, rank_matrix, rank_method = "sk_e", rank_weights;
    double rank_w = 0.3;
    int rank_ci_radius = 2;
    bool rank_emit = false;
    auto* c_rank = app.add_subcommand("rank", "Rank nodes by a method");
    c_rank->add_option("graph", rank_graph, "Edge-list file");
    c_rank->add_option("--matrix", rank_matrix,
                       "Decision-matrix CSV instead of a graph");
    c_rank->add_option("--method", rank_method,
                       "sk_e|sd|ks_entropy|dc|bc|cc|kshell|ci")
        ->capture_default_str();
    c_rank->add_option("--w-global", rank_w, "Global-metric weight for sk_e")
        ->capture_default_str();
    c_rank->add_option("--ci-radius", rank_ci_radius, "Ball radius for ci")
        ->capture_default_str();
    c_rank->add_option("--weights", rank_weights,
                       "Comma-separated criterion weights (--matrix with >2 columns)");
    c_rank->add_flag("--emit-matrices", rank_emit,
                     "Dump X*, R, C, D, U and zeta as JSON");

    // metrics
    std::string metrics_graph;
    std::vector<std::string> metrics_methods{"sd", "ks_entropy"};
    double metrics_w = 0.3;
    int metrics_ci_radius = 2;
    auto* c_metrics =
        app.add_subcommand("metrics", "Export raw per-node metric values");
    c_metrics->add_option("graph", metrics_graph, "Edge-list file")->required();
    c_metrics->add_option("--method", metrics_methods, "Methods to export")
        ->delimiter(',')
        ->capture_default_str();
    c_metrics->add_option("--w-global", metrics_w, "Global-metric weight for sk_e");
    c_metrics->add_option("--ci-radius", metrics_ci_radius, "Ball radius for ci");

    // sweep
    std::string sweep_graph;
    double sweep_step = 0.05, sweep_beta = 0.2;
    int sweep_days = 20, sweep_runs = 500, sweep_k = 50;
    double sweep_alpha = -1.0;
    auto* c_sweep =
        app.add_subcommand("sweep", "Find the best local/global weight via SIR");
    c_sweep->add_option("graph", sweep_graph, "Edge-list file")->required();
    c_sweep->add_option("--step", sweep_step, "Weight grid step")->capture_default_str();
    c_sweep->add_option("--days", sweep_days, "SIR duration")->capture_default_str();
    c_sweep->add_option("--runs", sweep_runs, "SIR repetitions")->capture_default_str();
    c_sweep->add_option("--k", sweep_k, "Seed-set size")->capture_default_str();
    c_sweep->add_option("--alpha", sweep_alpha, "Infection rate (default <k>/<k^2>)");
    c_sweep->add_option("--beta", sweep_beta, "Recovery rate")->capture_default_str();

    // sir
    std::string sir_graph, sir_method = "sk_e";
    int sir_k = 50, sir_days = 50, sir_runs = 500, sir_ci_radius = 2;
    double sir_alpha = -1.0, sir_beta = 0.2, sir_w = 0.3;
    auto* c_sir = app.add_subcommand("sir", "SIR trace for one method's seed set");
    c_sir->add_option("graph", sir_graph, "Edge-list file")->required();
    c_sir->add_option("--method", sir_method, "Ranking method")->capture_default_str();
    c_sir->add_option("--k", sir_k, "Seed-set size")->capture_default_str();
    c_sir->add_option("--days", sir_days, "Duration")->capture_default_str();
    c_sir->add_option("--runs", sir_runs, "Repetitions")->capture_default_str();
    c_sir->add_option("--alpha", sir_alpha, "Infection rate (default <k>/<k^2>)");
    c_sir->add_option("--beta", sir_beta, "Recovery rate")->capture_default_str();
    c_sir->add_option("--w-global", sir_w, "Global-metric weight for sk_e");
    c_sir->add_option("--ci-radius", sir_ci_radius, "Ball radius for ci");

    // ic
    std::string ic_graph, ic_method = "sk_e";
    int ic_k = 10, ic_runs = 500, ic_ci_radius = 2;
    double ic_p_min = 0.01, ic_p_max = 0.05, ic_p_step = 0.005, ic_w = 0.3;
    auto* c_ic = app.add_subcommand("ic", "Independent-cascade activation sweep");
    c_ic->add_option("graph", ic_graph, "Edge-list file")->required();
    c_ic->add_option("--method", ic_method, "Ranking method")->capture_default_str();
    c_ic->add_option("--k", ic_k, "Seed-set size")->capture_default_str();
    c_ic->add_option("--p-min", ic_p_min, "Lowest activation probability")
        ->capture_default_str();
    c_ic->add_option("--p-max", ic_p_max, "Highest activation probability")
        ->capture_default_str();
    c_ic->add_option("--p-step", ic_p_step, "Probability step")->capture_default_str();
    c_ic->add_option("--runs", ic_runs, "Repetitions")->capture_default_str();
    c_ic->add_option("--w-global", ic_w, "Global-metric weight for sk_e");
    c_ic->add_option("--ci-radius", ic_ci_radius, "Ball radius for ci");

    // constraint
    std::string con_graph, con_method = "sk_e";
    double con_frac = 0.05, con_w = 0.3;
    int con_q_max = 0, con_ci_radius = 2;
    auto* c_con =
        app.add_subcommand("constraint", "Constraint efficiency of a ranking");
    c_con->add_option("graph", con_graph, "Edge-list file")->required();
    c_con->add_option("--method", con_method, "Ranking method")->capture_default_str();
    c_con->add_option("--frac", con_frac, "Ground the top frac*n nodes")
        ->capture_default_str();
    c_con->add_option("--q-max", con_q_max, "Explicit Q_max (overrides --frac)");
    c_con->add_option("--w-global", con_w, "Global-metric weight for sk_e");
    c_con->add_option("--ci-radius", con_ci_radius, "Ball radius for ci");

    // compare
    std::string cmp_config;
    std::vector<std::string> cmp_methods;
    std::string cmp_out_dir, cmp_w_global;
    int cmp_k = -1;
    auto* c_cmp = app.add_subcommand(
        "compare", "Run the full experiment battery from a JSON config");
    c_cmp->add_option("config", cmp_config, "JSON config file")->required();
    c_cmp->add_option("--methods", cmp_methods, "Override method list")->delimiter(',');
    c_cmp->add_option("--out-dir", cmp_out_dir, "Override output directory");
    c_cmp->add_option("--k", cmp_k, "Override seed-set size");
    c_cmp->add_option("--w-global", cmp_w_global, "Override weight (number or sweep)");

    // generate
    std::string gen_model = "ba";
    int gen_n = 500, gen_m = 3;
    double gen_p = 0.01;
    std::uint64_t gen_seed = 1;
    auto* c_gen = app.add_subcommand("generate", "Emit a synthetic edge list");
    c_gen->add_option("--model", gen_model, "ba|er")
        ->check(CLI::IsMember({"ba", "er"}))
        ->capture_default_str();
    c_gen->add_option("--nodes", gen_n, "Node count")->capture_default_str();
    c_gen->add_option("--m-attach", gen_m, "Edges per new node (ba)")
        ->capture_default_str();
    c_gen->add_option("--p", gen_p, "Edge probability (er)")->capture_default_str();
    c_gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();

    // let global flags appear after the subcommand name
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ske::set_threads(g.threads);
        if (c_stats->parsed()) {
            run_stats(g, stats_graph);
        } else if (c_rank->parsed()) {
            if (rank_graph.empty() == rank_matrix.empty())
                throw ske::input_error("rank: give exactly one of <graph> or --matrix");
            run_rank(g, rank_graph, rank_matrix, rank_method, rank_w, rank_ci_radius,
                     rank_weights, rank_emit);
        } else if (c_metrics->parsed()) {
            run_metrics(g, metrics_graph, metrics_methods, metrics_w,
                        metrics_ci_radius);
        } else if (c_sweep->parsed()) {
            run_sweep(g, sweep_graph, sweep_step, sweep_days, sweep_runs, sweep_k,
                      sweep_alpha >= 0 ? std::optional(sweep_alpha) : std::nullopt,
                      sweep_beta);
        } else if (c_sir->parsed()) {
            run_sir(g, sir_graph, sir_method, sir_k, sir_days, sir_runs,
                    sir_alpha >= 0 ? std::optional(sir_alpha) : std::nullopt, sir_beta,
                    sir_w, sir_ci_radius);
        } else if (c_ic->parsed()) {
            run_ic(g, ic_graph, ic_method, ic_k, ic_p_min, ic_p_max, ic_p_step,
                   ic_runs, ic_w, ic_ci_radius);
        } else if (c_con->parsed()) {
            run_constraint(g, con_graph, con_method, con_frac, con_q_max, con_w,
                           con_ci_radius);
        } else if (c_cmp->parsed()) {
            auto cfg = ske::config_from_json_file(cmp_config);
            if (!cmp_methods.empty()) {
                cfg.methods.clear();
                for (const auto& name : cmp_methods)
                    cfg.methods.push_back(require_method(name));
            }
            if (!cmp_out_dir.empty()) cfg.out_dir = cmp_out_dir;
            if (cmp_k > 0) cfg.seed_count = cmp_k;
            if (!cmp_w_global.empty()) {
                if (cmp_w_global == "sweep") {
                    cfg.sweep_w = true;
                } else {
                    cfg.sweep_w = false;
                    cfg.w_global = std::stod(cmp_w_global);
                }
            }
            // global flags win over config values
            if (app.count("--rng-seed") > 0) cfg.rng_seed = g.rng_seed;
            if (app.count("--threads") > 0) cfg.threads = g.threads;
            ske::set_threads(cfg.threads);
            run_compare(g, cmp_config, cfg);
        } else if (c_gen->parsed()) {
            run_generate(g, gen_model, gen_n, gen_m, gen_p, gen_seed);
        }
    } catch (const ske::numeric_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const ske::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
