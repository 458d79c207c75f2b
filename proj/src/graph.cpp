#include "ske/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

#include "ske/errors.hpp"
#include "ske/rng.hpp"

namespace ske {

namespace {

std::optional<long long> parse_integer_label(const std::string& s) {
    if (s.empty()) return std::nullopt;
    long long value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

} // namespace

Graph Graph::from_edges(std::vector<std::string> labels,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    const int n = static_cast<int>(labels.size());
    g.labels_ = std::move(labels);
    g.index_.reserve(g.labels_.size());
    for (int i = 0; i < n; ++i) g.index_.emplace(g.labels_[i], i);

    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    g.offsets_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        auto& nbrs = adj[i];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.offsets_[i + 1] = g.offsets_[i] + static_cast<int>(nbrs.size());
    }
    g.targets_.reserve(g.offsets_[n]);
    for (int i = 0; i < n; ++i)
        g.targets_.insert(g.targets_.end(), adj[i].begin(), adj[i].end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Graph load_edge_list(std::istream& in, const LoadOptions& options, LoadReport* report) {
    LoadReport local;
    LoadReport& rep = report ? *report : local;
    rep = LoadReport{};

    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::vector<std::string> seen_labels;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++rep.lines_total;
        std::string_view sv(line);
        const auto first_non_ws = sv.find_first_not_of(" \t\r");
        if (first_non_ws == std::string_view::npos) continue;
        if (sv[first_non_ws] == '#') {
            ++rep.comment_lines;
            continue;
        }
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a >> b)) {
            throw input_error("malformed edge line " + std::to_string(line_no) +
                              ": expected two node labels, got \"" + line + "\"");
        }
        raw_edges.emplace_back(a, b);
        seen_labels.push_back(a);
        seen_labels.push_back(b);
    }
    if (raw_edges.empty()) throw input_error("empty edge list: no edges found");

    // Canonical label order: numeric when every label is an integer,
    // lexicographic otherwise. Makes loading independent of line order.
    std::sort(seen_labels.begin(), seen_labels.end());
    seen_labels.erase(std::unique(seen_labels.begin(), seen_labels.end()),
                      seen_labels.end());
    bool all_integer = true;
    for (const auto& s : seen_labels) {
        auto v = parse_integer_label(s);
        if (!v) {
            all_integer = false;
            break;
        }
        if (options.one_indexed_hint && *v < 1)
            throw input_error("label \"" + s + "\" violates the one-indexed hint");
    }
    if (options.one_indexed_hint && !all_integer)
        throw input_error("one-indexed hint set but labels are not all integers");
    if (all_integer) {
        std::sort(seen_labels.begin(), seen_labels.end(),
                  [](const std::string& a, const std::string& b) {
                      return *parse_integer_label(a) < *parse_integer_label(b);
                  });
    }

    std::unordered_map<std::string, int> index;
    index.reserve(seen_labels.size());
    for (int i = 0; i < static_cast<int>(seen_labels.size()); ++i)
        index.emplace(seen_labels[i], i);

    // Dedup edges (either orientation) and drop self-loops, counting both.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
        int u = index[a], v = index[b];
        if (u == v) {
            ++rep.self_loops_dropped;
            continue;
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    const auto unique_end = std::unique(edges.begin(), edges.end());
    rep.duplicate_edges_dropped = edges.end() - unique_end;
    edges.erase(unique_end, edges.end());

    if (!options.allow_isolated) {
        std::vector<char> has_edge_flag(seen_labels.size(), 0);
        for (const auto& [u, v] : edges) {
            has_edge_flag[u] = 1;
            has_edge_flag[v] = 1;
        }
        std::vector<int> remap(seen_labels.size(), -1);
        std::vector<std::string> kept;
        for (size_t i = 0; i < seen_labels.size(); ++i) {
            if (has_edge_flag[i]) {
                remap[i] = static_cast<int>(kept.size());
                kept.push_back(seen_labels[i]);
            } else {
                ++rep.isolated_nodes_dropped;
            }
        }
        for (auto& [u, v] : edges) {
            u = remap[u];
            v = remap[v];
        }
        seen_labels = std::move(kept);
    }
    if (seen_labels.empty()) throw input_error("graph has zero nodes after cleanup");

    Graph g = Graph::from_edges(std::move(seen_labels), edges);
    rep.nodes = g.node_count();
    rep.edges = g.edge_count();
    return g;
}

Graph load_edge_list_file(const std::string& path, const LoadOptions& options,
                          LoadReport* report) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return load_edge_list(in, options, report);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            components[id].push_back(u);
            for (int v : g.neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    for (auto& c : components) std::sort(c.begin(), c.end());
    return components;
}

NetworkStats stats(const Graph& g, Exec exec) {
    NetworkStats s;
    const int n = g.node_count();
    s.n = n;
    s.m = g.edge_count();
    s.mean_degree = n > 0 ? 2.0 * static_cast<double>(s.m) / n : 0.0;
    long long sq_sum = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        s.max_degree = std::max(s.max_degree, d);
        sq_sum += static_cast<long long>(d) * d;
    }
    s.mean_square_degree = n > 0 ? static_cast<double>(sq_sum) / n : 0.0;
    s.component_count = static_cast<int>(connected_components(g).size());

    // Local clustering per node into its own slot, then a fixed-order sum.
    std::vector<double> local_c(n, 0.0);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 64) if (par)
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d < 2) continue;
        const auto nbrs = g.neighbors(v);
        long long links = 0; // ordered neighbor pairs that are adjacent
        for (int u : nbrs) {
            const auto un = g.neighbors(u);
            // sorted-list intersection size
            auto a = nbrs.begin();
            auto b = un.begin();
            while (a != nbrs.end() && b != un.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++links;
                    ++a;
                    ++b;
                }
            }
        }
        local_c[v] = static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    }
    double c_sum = 0.0;
    for (int v = 0; v < n; ++v) c_sum += local_c[v];
    s.mean_clustering = n > 0 ? c_sum / n : 0.0;

    if (s.component_count == 1) {
        // All-pairs BFS; per-source distance sums are integers, so the
        // reduction is exact and order-independent.
        std::vector<long long> dist_sum(n, 0);
#pragma omp parallel for schedule(dynamic, 16) if (par)
        for (int src = 0; src < n; ++src) {
            std::vector<int> dist(n, -1);
            std::vector<int> queue;
            queue.reserve(n);
            dist[src] = 0;
            queue.push_back(src);
            for (size_t head = 0; head < queue.size(); ++head) {
                const int u = queue[head];
                for (int v : g.neighbors(u)) {
                    if (dist[v] == -1) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            long long sum = 0;
            for (int v = 0; v < n; ++v) sum += dist[v];
            dist_sum[src] = sum;
        }
        long long total = 0;
        for (int src = 0; src < n; ++src) total += dist_sum[src];
        // each unordered pair counted from both endpoints
        s.mean_path_length = n > 1 ? static_cast<double>(total) /
                                         (static_cast<double>(n) * (n - 1))
                                   : 0.0;
    }
    return s;
}

Graph generate_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw input_error("erdos_renyi: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw input_error("erdos_renyi: p must be in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    return Graph::from_edges(std::move(labels), edges);
}

Graph generate_barabasi_albert(int n, int m_attach, std::uint64_t seed) {
    if (n < 3) throw input_error("barabasi_albert: n must be >= 3 (triangle seed)");
    if (m_attach < 1 || m_attach >= n)
        throw input_error("barabasi_albert: need 1 <= m_attach < n");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
    // One entry per edge endpoint; uniform draws from it are
    // degree-proportional.
    std::vector<int> stubs = {0, 1, 0, 2, 1, 2};
    std::vector<int> picked;
    for (int v = 3; v < n; ++v) {
        const int want = std::min(m_attach, v);
        picked.clear();
        while (static_cast<int>(picked.size()) < want) {
            const int t = stubs[rng.next_below(stubs.size())];
            if (std::find(picked.begin(), picked.end(), t) == picked.end())
                picked.push_back(t);
        }
        for (int t : picked) {
            edges.emplace_back(t, v);
            stubs.push_back(t);
            stubs.push_back(v);
        }
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    return Graph::from_edges(std::move(labels), edges);
}

} // namespace ske
