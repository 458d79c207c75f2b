#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ske/diffusion.hpp"
#include "ske/electre.hpp"
#include "ske/graph.hpp"
#include "ske/laplacian.hpp"

namespace ske {

enum class Method { sk_e, sd, ks_entropy, dc, bc, cc, kshell, ci };

constexpr std::ptrdiff_t kMethodCount = 8;
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::vector<Method> all_methods();

struct RankingOptions {
    double w_global = 0.3; // sk_e only
    int ci_radius = 2;     // ci only
    Exec exec = Exec::parallel;
};

// Per-node score under one method (zeta for sk_e, the raw metric otherwise).
std::vector<double> method_scores(const Graph& g, Method m,
                                  const RankingOptions& options = {});
// Descending-score node order, ties by ascending index.
std::vector<int> method_ranking(const Graph& g, Method m,
                                const RankingOptions& options = {});

// Flat experiment configuration; loadable from a JSON object whose keys
// match the field names, and every key can be overridden by a CLI flag.
struct ExperimentConfig {
    std::vector<std::string> graphs;
    std::vector<Method> methods = all_methods();
    double w_global = 0.3;
    bool sweep_w = false; // "w_global": "sweep" — use each graph's argmax
    double sweep_step = 0.05;
    int sweep_days = 20;
    int sweep_runs = 500;
    int seed_count = 50;
    std::optional<double> alpha; // unset: <k>/<k^2> of the graph
    double beta = 0.2;
    int sir_days = 50;
    int sir_runs = 500;
    double ic_p_min = 0.01;
    double ic_p_max = 0.05;
    double ic_p_step = 0.005;
    int ic_runs = 500;
    std::vector<double> constraint_fracs = {0.05, 0.1};
    int ci_radius = 2;
    std::uint64_t rng_seed = 1;
    int threads = 0;
    std::string format = "csv";
    std::string out_dir = "ske-out";
    std::vector<std::string> experiments = {"sweep", "sir", "ic", "constraint"};
};

ExperimentConfig config_from_json_file(const std::string& path);

// ---- drivers ----

struct SweepRow {
    double w_global;
    double f_final_mean;
    double f_final_std;
};
struct SweepResult {
    std::vector<SweepRow> rows;
    double argmax_w = 0.0; // grid point with the largest final mean, ties -> smallest w
};

// For each w on the grid 0, step, ..., 1: rank with the fused method at that
// weight, seed the top seed_count nodes, run SIR for base.days steps, and
// record the final F. base.seeds is ignored. All rows share base.rng_seed so
// they see common random numbers.
SweepResult weight_sweep(const Graph& g, double grid_step, const SirParams& base,
                         int seed_count, Exec exec = Exec::parallel);

struct SirComparison {
    std::vector<Method> methods;
    std::vector<SirTrace> traces; // aligned with methods
    double alpha_used = 0.0;
};
SirComparison compare_methods_sir(const Graph& g, const ExperimentConfig& cfg,
                                  Exec exec = Exec::parallel);

struct IcComparison {
    std::vector<Method> methods;
    std::vector<double> p_grid;
    // indexed [p][method]
    std::vector<std::vector<double>> active_mean;
    std::vector<std::vector<double>> active_std;
};
IcComparison compare_methods_ic(const Graph& g, const ExperimentConfig& cfg,
                                Exec exec = Exec::parallel);

struct ConstraintComparison {
    std::vector<Method> methods;
    std::vector<double> fracs;
    std::vector<int> q_max;                    // per frac: ceil(frac * n)
    std::vector<std::vector<double>> p_values; // indexed [frac][method]
};
ConstraintComparison compare_constraint(const Graph& g, const ExperimentConfig& cfg,
                                        Exec exec = Exec::parallel);

// ---- serialization (CSV text, byte-stable) ----

std::string csv_stats(const NetworkStats& s);
std::string csv_ranking(const std::vector<std::string>& labels,
                        const std::vector<int>& ranking,
                        const std::vector<double>& scores);
std::string csv_metrics(const std::vector<std::string>& labels,
                        const std::vector<MetricVector>& metrics);
std::string csv_trace(const SirTrace& trace);
std::string csv_sweep(const SweepResult& sweep);
std::string csv_ic_sweep(const std::vector<double>& p_grid,
                         const std::vector<IcResult>& results);
std::string csv_control(const ControlReport& report);
std::string csv_sir_comparison(const SirComparison& cmp);
std::string csv_ic_comparison(const IcComparison& cmp);
// One table per frac: rows = networks, columns = methods.
std::string csv_constraint_table(const std::vector<std::string>& network_names,
                                 const std::vector<Method>& methods,
                                 const std::vector<std::vector<double>>& p_values);

} // namespace ske
