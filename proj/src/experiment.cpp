#include "ske/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "ske/errors.hpp"
#include "ske/io.hpp"

namespace ske {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::sk_e: return "sk_e";
        case Method::sd: return "sd";
        case Method::ks_entropy: return "ks_entropy";
        case Method::dc: return "dc";
        case Method::bc: return "bc";
        case Method::cc: return "cc";
        case Method::kshell: return "kshell";
        case Method::ci: return "ci";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : all_methods())
        if (method_name(m) == name) return m;
    return std::nullopt;
}

std::vector<Method> all_methods() {
    return {Method::sk_e, Method::sd, Method::ks_entropy, Method::dc,
            Method::bc,   Method::cc, Method::kshell,     Method::ci};
}

std::vector<double> method_scores(const Graph& g, Method m,
                                  const RankingOptions& options) {
    switch (m) {
        case Method::sk_e:
            return sk_e(g, options.w_global, {.exec = options.exec}).net_dominance;
        case Method::sd: return sd_local(g).values;
        case Method::ks_entropy: return ks_entropy(g).values;
        case Method::dc: return degree_centrality(g).values;
        case Method::bc: return betweenness_centrality(g, options.exec).values;
        case Method::cc: return closeness_centrality(g, options.exec).values;
        case Method::kshell: return k_shell(g).values;
        case Method::ci:
            return collective_influence(g, options.ci_radius, options.exec).values;
    }
    throw input_error("unknown method");
}

std::vector<int> method_ranking(const Graph& g, Method m,
                                const RankingOptions& options) {
    return ranking_from_scores(method_scores(g, m, options));
}

// ---- config ----

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const char* why) {
    throw input_error("config key \"" + key + "\": " + why);
}

} // namespace

ExperimentConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw input_error("config must be a JSON object");

    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "graph") {
                cfg.graphs = {value.get<std::string>()};
            } else if (key == "graphs") {
                cfg.graphs = value.get<std::vector<std::string>>();
            } else if (key == "methods") {
                cfg.methods.clear();
                for (const auto& name : value.get<std::vector<std::string>>()) {
                    auto m = parse_method(name);
                    if (!m) bad_key(key, "unknown method name");
                    cfg.methods.push_back(*m);
                }
            } else if (key == "w_global") {
                if (value.is_string()) {
                    if (value.get<std::string>() != "sweep")
                        bad_key(key, "must be a number or \"sweep\"");
                    cfg.sweep_w = true;
                } else {
                    cfg.w_global = value.get<double>();
                }
            } else if (key == "sweep_step") {
                cfg.sweep_step = value.get<double>();
            } else if (key == "sweep_days") {
                cfg.sweep_days = value.get<int>();
            } else if (key == "sweep_runs") {
                cfg.sweep_runs = value.get<int>();
            } else if (key == "seed_count" || key == "k") {
                cfg.seed_count = value.get<int>();
            } else if (key == "alpha") {
                if (!value.is_null()) cfg.alpha = value.get<double>();
            } else if (key == "beta") {
                cfg.beta = value.get<double>();
            } else if (key == "sir_days") {
                cfg.sir_days = value.get<int>();
            } else if (key == "sir_runs") {
                cfg.sir_runs = value.get<int>();
            } else if (key == "ic_p_min") {
                cfg.ic_p_min = value.get<double>();
            } else if (key == "ic_p_max") {
                cfg.ic_p_max = value.get<double>();
            } else if (key == "ic_p_step") {
                cfg.ic_p_step = value.get<double>();
            } else if (key == "ic_runs") {
                cfg.ic_runs = value.get<int>();
            } else if (key == "constraint_fracs") {
                cfg.constraint_fracs = value.get<std::vector<double>>();
            } else if (key == "ci_radius") {
                cfg.ci_radius = value.get<int>();
            } else if (key == "rng_seed") {
                cfg.rng_seed = value.get<std::uint64_t>();
            } else if (key == "threads") {
                cfg.threads = value.get<int>();
            } else if (key == "format") {
                cfg.format = value.get<std::string>();
                if (cfg.format != "csv" && cfg.format != "json")
                    bad_key(key, "must be \"csv\" or \"json\"");
            } else if (key == "out_dir") {
                cfg.out_dir = value.get<std::string>();
            } else if (key == "experiments") {
                cfg.experiments = value.get<std::vector<std::string>>();
                for (const auto& e : cfg.experiments)
                    if (e != "sweep" && e != "sir" && e != "ic" && e != "constraint")
                        bad_key(key, "entries must be sweep|sir|ic|constraint");
            } else {
                bad_key(key, "unknown key");
            }
        } catch (const json::exception& e) {
            bad_key(key, e.what());
        }
    }
    return cfg;
}

// ---- drivers ----

SweepResult weight_sweep(const Graph& g, double grid_step, const SirParams& base,
                         int seed_count, Exec exec) {
    if (!(grid_step > 0.0 && grid_step <= 0.5))
        throw input_error("weight_sweep: grid step must lie in (0, 0.5]");
    const int steps = static_cast<int>(std::llround(1.0 / grid_step));
    if (std::abs(steps * grid_step - 1.0) > 1e-9)
        throw input_error("weight_sweep: grid step must divide [0, 1]");
    if (seed_count < 1 || seed_count > g.node_count())
        throw input_error("weight_sweep: seed count must lie in [1, n]");

    // metrics are weight-independent; compute them once
    const auto x = build_decision_matrix({sd_local(g), ks_entropy(g)});

    SweepResult sweep;
    sweep.rows.reserve(steps + 1);
    double best = -1.0;
    for (int i = 0; i <= steps; ++i) {
        const double w = static_cast<double>(i) / steps;
        const auto fusion = fuse(x, Weights::local_global(w), {.exec = exec});
        SirParams params = base;
        params.seeds.assign(fusion.ranking.begin(), fusion.ranking.begin() + seed_count);
        const auto trace = sir_monte_carlo(g, params, exec);
        SweepRow row{w, trace.f_mean.back(), trace.f_std.back()};
        sweep.rows.push_back(row);
        if (row.f_final_mean > best) {
            best = row.f_final_mean;
            sweep.argmax_w = w;
        }
    }
    return sweep;
}

namespace {

std::vector<int> top_k(const std::vector<int>& ranking, int k) {
    return {ranking.begin(), ranking.begin() + k};
}

void check_seed_count(const Graph& g, int k) {
    if (k < 1 || k > g.node_count())
        throw input_error("seed count must lie in [1, n]");
}

} // namespace

SirComparison compare_methods_sir(const Graph& g, const ExperimentConfig& cfg,
                                  Exec exec) {
    if (cfg.methods.empty()) throw input_error("no methods requested");
    check_seed_count(g, cfg.seed_count);
    SirComparison cmp;
    cmp.methods = cfg.methods;
    cmp.alpha_used = cfg.alpha ? *cfg.alpha : default_alpha(g);
    const RankingOptions ropt{cfg.w_global, cfg.ci_radius, exec};
    for (Method m : cfg.methods) {
        SirParams params;
        params.alpha = cmp.alpha_used;
        params.beta = cfg.beta;
        params.days = cfg.sir_days;
        params.runs = cfg.sir_runs;
        params.rng_seed = cfg.rng_seed;
        params.seeds = top_k(method_ranking(g, m, ropt), cfg.seed_count);
        cmp.traces.push_back(sir_monte_carlo(g, params, exec));
    }
    return cmp;
}

IcComparison compare_methods_ic(const Graph& g, const ExperimentConfig& cfg,
                                Exec exec) {
    if (cfg.methods.empty()) throw input_error("no methods requested");
    check_seed_count(g, cfg.seed_count);
    if (!(cfg.ic_p_step > 0.0) || cfg.ic_p_max < cfg.ic_p_min)
        throw input_error("ic: bad probability range");
    IcComparison cmp;
    cmp.methods = cfg.methods;
    const RankingOptions ropt{cfg.w_global, cfg.ci_radius, exec};
    std::vector<std::vector<int>> seeds;
    seeds.reserve(cfg.methods.size());
    for (Method m : cfg.methods)
        seeds.push_back(top_k(method_ranking(g, m, ropt), cfg.seed_count));

    // inclusive grid with half-step slack against round-off
    for (double p = cfg.ic_p_min; p <= cfg.ic_p_max + cfg.ic_p_step * 0.5;
         p += cfg.ic_p_step) {
        const double p_clamped = std::min(p, 1.0);
        cmp.p_grid.push_back(p_clamped);
        auto& means = cmp.active_mean.emplace_back();
        auto& stds = cmp.active_std.emplace_back();
        for (size_t mi = 0; mi < cfg.methods.size(); ++mi) {
            IcParams params{p_clamped, seeds[mi], cfg.ic_runs, cfg.rng_seed};
            const auto res = ic_monte_carlo(g, params, exec);
            means.push_back(res.active_mean);
            stds.push_back(res.active_std);
        }
    }
    return cmp;
}

ConstraintComparison compare_constraint(const Graph& g, const ExperimentConfig& cfg,
                                        Exec exec) {
    if (cfg.methods.empty()) throw input_error("no methods requested");
    ConstraintComparison cmp;
    cmp.methods = cfg.methods;
    cmp.fracs = cfg.constraint_fracs;
    const RankingOptions ropt{cfg.w_global, cfg.ci_radius, exec};
    std::vector<std::vector<int>> rankings;
    rankings.reserve(cfg.methods.size());
    for (Method m : cfg.methods) rankings.push_back(method_ranking(g, m, ropt));

    for (double frac : cfg.constraint_fracs) {
        const int q_max = std::max(
            1, static_cast<int>(std::ceil(frac * g.node_count())));
        cmp.q_max.push_back(q_max);
        auto& row = cmp.p_values.emplace_back();
        for (const auto& ranking : rankings)
            row.push_back(constraint_efficiency(g, ranking, q_max, exec).p_value);
    }
    return cmp;
}

// ---- CSV serialization ----

std::string csv_stats(const NetworkStats& s) {
    std::string out =
        "n,m,mean_degree,max_degree,mean_clustering,mean_path_length,"
        "mean_square_degree,component_count\n";
    out += std::to_string(s.n) + ',' + std::to_string(s.m) + ',' +
           fmt_double(s.mean_degree) + ',' + std::to_string(s.max_degree) + ',' +
           fmt_double(s.mean_clustering) + ',' +
           (s.mean_path_length ? fmt_double(*s.mean_path_length) : std::string()) +
           ',' + fmt_double(s.mean_square_degree) + ',' +
           std::to_string(s.component_count) + '\n';
    return out;
}

std::string csv_ranking(const std::vector<std::string>& labels,
                        const std::vector<int>& ranking,
                        const std::vector<double>& scores) {
    std::string out = "rank,node_label,zeta\n";
    for (size_t r = 0; r < ranking.size(); ++r) {
        const int v = ranking[r];
        out += std::to_string(r + 1) + ',' + labels[v] + ',' + fmt_double(scores[v]) +
               '\n';
    }
    return out;
}

std::string csv_metrics(const std::vector<std::string>& labels,
                        const std::vector<MetricVector>& metrics) {
    std::string out = "node_label,metric_name,value\n";
    for (const auto& m : metrics)
        for (size_t v = 0; v < m.values.size(); ++v)
            out += labels[v] + ',' + m.name + ',' + fmt_double(m.values[v]) + '\n';
    return out;
}

std::string csv_trace(const SirTrace& trace) {
    std::string out = "t,f_mean,f_std\n";
    for (size_t t = 0; t < trace.f_mean.size(); ++t)
        out += std::to_string(t) + ',' + fmt_double(trace.f_mean[t]) + ',' +
               fmt_double(trace.f_std[t]) + '\n';
    return out;
}

std::string csv_sweep(const SweepResult& sweep) {
    std::string out = "w_global,f_final_mean,f_final_std\n";
    for (const auto& row : sweep.rows)
        out += fmt_double(row.w_global) + ',' + fmt_double(row.f_final_mean) + ',' +
               fmt_double(row.f_final_std) + '\n';
    out += "# argmax_w," + fmt_double(sweep.argmax_w) + '\n';
    return out;
}

std::string csv_ic_sweep(const std::vector<double>& p_grid,
                         const std::vector<IcResult>& results) {
    std::string out = "p,active_mean,active_std\n";
    for (size_t i = 0; i < p_grid.size(); ++i)
        out += fmt_double(p_grid[i]) + ',' + fmt_double(results[i].active_mean) + ',' +
               fmt_double(results[i].active_std) + '\n';
    return out;
}

std::string csv_control(const ControlReport& report) {
    std::string out = "Q,mu1,inv_mu1\n";
    for (const auto& [q, mu] : report.per_q)
        out += std::to_string(q) + ',' + fmt_double(mu) + ',' + fmt_double(1.0 / mu) +
               '\n';
    out += "q_max,P\n";
    out += std::to_string(report.q_max) + ',' + fmt_double(report.p_value) + '\n';
    return out;
}

std::string csv_sir_comparison(const SirComparison& cmp) {
    std::string out = "t";
    for (Method m : cmp.methods) out += ',' + std::string(method_name(m));
    out += '\n';
    const size_t steps = cmp.traces.empty() ? 0 : cmp.traces.front().f_mean.size();
    for (size_t t = 0; t < steps; ++t) {
        out += std::to_string(t);
        for (const auto& trace : cmp.traces) out += ',' + fmt_double(trace.f_mean[t]);
        out += '\n';
    }
    return out;
}

std::string csv_ic_comparison(const IcComparison& cmp) {
    std::string out = "p";
    for (Method m : cmp.methods) out += ',' + std::string(method_name(m));
    out += '\n';
    for (size_t i = 0; i < cmp.p_grid.size(); ++i) {
        out += fmt_double(cmp.p_grid[i]);
        for (double v : cmp.active_mean[i]) out += ',' + fmt_double(v);
        out += '\n';
    }
    return out;
}

std::string csv_constraint_table(const std::vector<std::string>& network_names,
                                 const std::vector<Method>& methods,
                                 const std::vector<std::vector<double>>& p_values) {
    std::string out = "network";
    for (Method m : methods) out += ',' + std::string(method_name(m));
    out += '\n';
    for (size_t i = 0; i < network_names.size(); ++i) {
        out += network_names[i];
        for (double v : p_values[i]) out += ',' + fmt_double(v);
        out += '\n';
    }
    return out;
}

} // namespace ske
