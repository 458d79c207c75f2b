#include "ske/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "ske/errors.hpp"
#include "ske/rng.hpp"

namespace ske {

namespace {

void validate_common(const Graph& g, const std::vector<int>& seeds, double prob,
                     const char* what) {
    if (!(prob >= 0.0 && prob <= 1.0))
        throw input_error(std::string(what) + ": probability must lie in [0, 1]");
    if (seeds.empty()) throw input_error(std::string(what) + ": seed set is empty");
    for (int s : seeds)
        if (s < 0 || s >= g.node_count())
            throw input_error(std::string(what) + ": seed node out of range");
}

// mean and sample standard deviation of integer observations
std::pair<double, double> mean_std(const std::vector<int>& xs) {
    const int n = static_cast<int>(xs.size());
    long long sum = 0;
    for (int x : xs) sum += x;
    const double mean = static_cast<double>(sum) / n;
    if (n < 2) return {mean, 0.0};
    double ss = 0.0;
    for (int x : xs) {
        const double d = x - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1))};
}

enum : std::uint8_t { S = 0, I = 1, R = 2, NEWLY = 3 };

} // namespace

double default_alpha(double mean_degree, double mean_square_degree) {
    if (!(mean_square_degree > 0.0))
        throw input_error("default_alpha: graph has no edges");
    return std::min(1.0, mean_degree / mean_square_degree);
}

double default_alpha(const Graph& g) {
    const int n = g.node_count();
    long long deg_sum = 0, sq_sum = 0;
    for (int v = 0; v < n; ++v) {
        const long long d = g.degree(v);
        deg_sum += d;
        sq_sum += d * d;
    }
    return default_alpha(static_cast<double>(deg_sum) / n,
                         static_cast<double>(sq_sum) / n);
}

SirCompartments sir_run_compartments(const Graph& g, const SirParams& params,
                                     int run_index) {
    validate_common(g, params.seeds, params.alpha, "sir");
    if (!(params.beta >= 0.0 && params.beta <= 1.0))
        throw input_error("sir: beta must lie in [0, 1]");
    if (params.days < 0) throw input_error("sir: days must be >= 0");

    const int n = g.node_count();
    Rng rng = stream_for_run(params.rng_seed, static_cast<std::uint64_t>(run_index));
    std::vector<std::uint8_t> state(n, S);
    int infected = 0, recovered = 0;
    for (int s : params.seeds) {
        if (state[s] == S) {
            state[s] = I;
            ++infected;
        }
    }

    SirCompartments out;
    out.s.reserve(params.days + 1);
    out.i.reserve(params.days + 1);
    out.r.reserve(params.days + 1);
    out.s.push_back(n - infected);
    out.i.push_back(infected);
    out.r.push_back(recovered);

    for (int t = 1; t <= params.days; ++t) {
        if (infected > 0) {
            // contacts first: every infected node gets a chance at each
            // still-susceptible neighbor, in fixed node order
            for (int u = 0; u < n; ++u) {
                if (state[u] != I) continue;
                for (int v : g.neighbors(u)) {
                    if (state[v] == S && rng.bernoulli(params.alpha)) state[v] = NEWLY;
                }
            }
            // then recoveries of nodes that entered the step infected
            for (int u = 0; u < n; ++u) {
                if (state[u] == I && rng.bernoulli(params.beta)) {
                    state[u] = R;
                    --infected;
                    ++recovered;
                }
            }
            for (int u = 0; u < n; ++u) {
                if (state[u] == NEWLY) {
                    state[u] = I;
                    ++infected;
                }
            }
        }
        out.s.push_back(n - infected - recovered);
        out.i.push_back(infected);
        out.r.push_back(recovered);
    }
    return out;
}

std::vector<int> sir_run(const Graph& g, const SirParams& params, int run_index) {
    const auto c = sir_run_compartments(g, params, run_index);
    std::vector<int> f(c.i.size());
    for (size_t t = 0; t < f.size(); ++t) f[t] = c.i[t] + c.r[t];
    return f;
}

SirTrace sir_monte_carlo(const Graph& g, const SirParams& params, Exec exec) {
    validate_common(g, params.seeds, params.alpha, "sir");
    if (params.runs < 1) throw input_error("sir: runs must be >= 1");
    const int steps = params.days + 1;
    const int runs = params.runs;
    std::vector<int> f_all(static_cast<size_t>(runs) * steps);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 8) if (par)
    for (int run = 0; run < runs; ++run) {
        const auto f = sir_run(g, params, run);
        std::copy(f.begin(), f.end(), f_all.begin() + static_cast<size_t>(run) * steps);
    }
    SirTrace trace;
    trace.runs = runs;
    trace.f_mean.resize(steps);
    trace.f_std.resize(steps);
    std::vector<int> column(runs);
    for (int t = 0; t < steps; ++t) {
        for (int run = 0; run < runs; ++run)
            column[run] = f_all[static_cast<size_t>(run) * steps + t];
        const auto [mean, sd] = mean_std(column);
        trace.f_mean[t] = mean;
        trace.f_std[t] = sd;
    }
    return trace;
}

int ic_run(const Graph& g, const IcParams& params, int run_index) {
    validate_common(g, params.seeds, params.p, "ic");
    const int n = g.node_count();
    Rng rng = stream_for_run(params.rng_seed, static_cast<std::uint64_t>(run_index));
    std::vector<char> active(n, 0);
    std::vector<int> frontier;
    for (int s : params.seeds) {
        if (!active[s]) {
            active[s] = 1;
            frontier.push_back(s);
        }
    }
    std::sort(frontier.begin(), frontier.end());
    int count = static_cast<int>(frontier.size());

    std::vector<int> next;
    while (!frontier.empty()) {
        next.clear();
        for (int u : frontier) {
            for (int v : g.neighbors(u)) {
                if (!active[v] && rng.bernoulli(params.p)) {
                    active[v] = 1;
                    next.push_back(v);
                    ++count;
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = next;
    }
    return count;
}

IcResult ic_monte_carlo(const Graph& g, const IcParams& params, Exec exec) {
    validate_common(g, params.seeds, params.p, "ic");
    if (params.runs < 1) throw input_error("ic: runs must be >= 1");
    const int runs = params.runs;
    std::vector<int> totals(runs);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 8) if (par)
    for (int run = 0; run < runs; ++run) totals[run] = ic_run(g, params, run);
    const auto [mean, sd] = mean_std(totals);
    return IcResult{mean, sd, runs};
}

} // namespace ske
