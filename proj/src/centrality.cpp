#include "ske/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ske/errors.hpp"

namespace ske {

MetricVector sd_local(const Graph& g) {
    const int n = g.node_count();
    int max_d = 0;
    for (int v = 0; v < n; ++v) max_d = std::max(max_d, g.degree(v));
    MetricVector mv{"sd", std::vector<double>(n, 1.0)};
    if (max_d == 0) return mv;
    for (int v = 0; v < n; ++v)
        mv.values[v] = std::exp(static_cast<double>(g.degree(v)) / max_d);
    return mv;
}

// Batagelj-Zaversnik bucket peeling, O(n + m).
std::vector<int> k_shell_indices(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> deg(n), shell(n, 0);
    int max_d = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_d = std::max(max_d, deg[v]);
    }
    std::vector<int> bin(max_d + 2, 0);
    for (int v = 0; v < n; ++v) ++bin[deg[v]];
    int start = 0;
    for (int d = 0; d <= max_d; ++d) {
        const int count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<int> order(n), pos(n);
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]];
        order[pos[v]] = v;
        ++bin[deg[v]];
    }
    for (int d = max_d; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        shell[v] = deg[v];
        for (int u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                // move u one bucket down before decrementing its degree
                const int du = deg[u];
                const int pu = pos[u];
                const int pw = bin[du];
                const int w = order[pw];
                if (u != w) {
                    std::swap(order[pu], order[pw]);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return shell;
}

MetricVector k_shell(const Graph& g) {
    const auto shells = k_shell_indices(g);
    MetricVector mv{"kshell", {}};
    mv.values.assign(shells.begin(), shells.end());
    return mv;
}

MetricVector ks_entropy(const Graph& g) {
    const int n = g.node_count();
    const auto shells = k_shell_indices(g);
    MetricVector mv{"ks_entropy", std::vector<double>(n, 0.0)};
    for (int v = 0; v < n; ++v) {
        if (shells[v] == 0) continue;
        long long neighbor_sum = 0;
        for (int u : g.neighbors(v)) neighbor_sum += shells[u];
        if (neighbor_sum == 0) continue;
        const double ratio = static_cast<double>(shells[v]) / neighbor_sum;
        if (ratio >= 1.0) continue; // -x*ln(x) -> 0 at x = 1
        mv.values[v] = -ratio * std::log(ratio);
    }
    return mv;
}

MetricVector degree_centrality(const Graph& g) {
    const int n = g.node_count();
    MetricVector mv{"dc", std::vector<double>(n)};
    for (int v = 0; v < n; ++v) mv.values[v] = g.degree(v);
    return mv;
}

MetricVector closeness_centrality(const Graph& g, Exec exec) {
    const int n = g.node_count();
    MetricVector mv{"cc", std::vector<double>(n, 0.0)};
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
    for (int src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue;
        queue.reserve(n);
        dist[src] = 0;
        queue.push_back(src);
        long long sum = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            sum += dist[u];
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        const auto reached = static_cast<double>(queue.size()); // component size
        if (reached < 2 || n < 2) continue;
        const double frac = (reached - 1) / (n - 1);
        mv.values[src] = frac * ((reached - 1) / static_cast<double>(sum));
    }
    return mv;
}

namespace {

// One Brandes source: BFS counts shortest paths, then dependencies are
// accumulated in reverse BFS order by rescanning the neighbor lists for
// predecessors (dist[v] == dist[w] - 1).
void brandes_source(const Graph& g, int src, std::vector<int>& dist,
                    std::vector<double>& sigma, std::vector<double>& delta,
                    std::vector<int>& queue, std::vector<double>& acc) {
    const int n = g.node_count();
    dist.assign(n, -1);
    sigma.assign(n, 0.0);
    delta.assign(n, 0.0);
    queue.clear();
    dist[src] = 0;
    sigma[src] = 1.0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : g.neighbors(u)) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
    }
    for (size_t i = queue.size(); i-- > 1;) {
        const int w = queue[i];
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (int v : g.neighbors(w)) {
            if (dist[v] == dist[w] - 1) delta[v] += sigma[v] * coeff;
        }
        acc[w] += delta[w];
    }
}

} // namespace

MetricVector betweenness_centrality(const Graph& g, Exec exec) {
    const int n = g.node_count();
    MetricVector mv{"bc", std::vector<double>(n, 0.0)};
    if (n == 0) return mv;

    // Sources are grouped in fixed blocks; each block accumulates its own
    // partial vector and the partials are summed in block order, so the
    // result does not depend on the number of threads.
    constexpr int kBlock = 64;
    const int blocks = (n + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> partial(blocks);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int b = 0; b < blocks; ++b) {
        auto& acc = partial[b];
        acc.assign(n, 0.0);
        std::vector<int> dist, queue;
        std::vector<double> sigma, delta;
        const int lo = b * kBlock;
        const int hi = std::min(n, lo + kBlock);
        for (int src = lo; src < hi; ++src)
            brandes_source(g, src, dist, sigma, delta, queue, acc);
    }
    for (int b = 0; b < blocks; ++b)
        for (int v = 0; v < n; ++v) mv.values[v] += partial[b][v];
    // each unordered pair was accumulated from both endpoints
    for (int v = 0; v < n; ++v) mv.values[v] *= 0.5;
    return mv;
}

MetricVector collective_influence(const Graph& g, int radius, Exec exec) {
    if (radius < 1) throw input_error("collective_influence: radius must be >= 1");
    const int n = g.node_count();
    MetricVector mv{"ci", std::vector<double>(n, 0.0)};
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
    for (int src = 0; src < n; ++src) {
        if (g.degree(src) == 0) continue;
        // BFS truncated at the ball boundary
        std::vector<int> dist(n, -1);
        std::vector<int> queue;
        dist[src] = 0;
        queue.push_back(src);
        long long boundary = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (dist[u] == radius) {
                boundary += g.degree(u) - 1;
                continue;
            }
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        mv.values[src] =
            static_cast<double>(g.degree(src) - 1) * static_cast<double>(boundary);
    }
    return mv;
}

std::vector<int> ranking_from_scores(const std::vector<double>& scores) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

} // namespace ske
