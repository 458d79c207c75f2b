#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ske/exec.hpp"

namespace ske {

// Immutable undirected, unweighted simple graph in CSR form. Neighbor lists
// are sorted, edges are deduplicated and symmetric, self-loops are excluded.
// Safe to share across threads once built.
class Graph {
public:
    // Build from (possibly messy) edge pairs over `labels.size()` nodes.
    // Edges are given as index pairs into `labels`; duplicates and loops are
    // dropped silently here (the loader counts them before calling this).
    static Graph from_edges(std::vector<std::string> labels,
                            const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return static_cast<int>(offsets_.size()) - 1; }
    long long edge_count() const { return static_cast<long long>(targets_.size()) / 2; }

    std::span<const int> neighbors(int v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

private:
    Graph() = default;
    std::vector<int> offsets_;
    std::vector<int> targets_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

struct LoadOptions {
    // Validation hint: when set, every label must be an integer >= 1
    // (rejects files that are secretly 0-indexed or non-numeric).
    bool one_indexed_hint = false;
    // Keep nodes that end up with no edges (e.g. a node seen only in a
    // dropped self-loop). Degree-0 nodes are legitimate spreaders of size 1.
    bool allow_isolated = true;
};

// What the loader cleaned up, reported as structured warnings by the CLI.
struct LoadReport {
    long long lines_total = 0;
    long long comment_lines = 0;
    long long self_loops_dropped = 0;
    long long duplicate_edges_dropped = 0;
    long long isolated_nodes_dropped = 0;
    int nodes = 0;
    long long edges = 0;
};

// Parse "u v [ignored...]" lines; '#' starts a comment, blank lines are
// skipped. Node labels are arbitrary tokens; they are mapped to dense
// indices in numeric order when all labels are integers, lexicographic
// order otherwise, so the loaded graph is canonical under line permutation
// and endpoint swaps.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {},
                     LoadReport* report = nullptr);
Graph load_edge_list_file(const std::string& path, const LoadOptions& options = {},
                          LoadReport* report = nullptr);

struct NetworkStats {
    int n = 0;
    long long m = 0;
    double mean_degree = 0.0;
    int max_degree = 0;
    double mean_clustering = 0.0;
    std::optional<double> mean_path_length; // absent when disconnected
    double mean_square_degree = 0.0;
    int component_count = 0;
};

// Topology summary. <c> is the mean of local clustering coefficients
// (degree < 2 contributes 0); <l> is the mean shortest-path length over
// unordered pairs and only exists for connected graphs.
NetworkStats stats(const Graph& g, Exec exec = Exec::parallel);

// Maximal connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Erdos-Renyi G(n, p): every unordered pair is an edge with probability p.
Graph generate_erdos_renyi(int n, double p, std::uint64_t seed);

// Preferential attachment starting from a triangle; each new node attaches
// to min(m_attach, existing) distinct nodes picked proportionally to degree.
Graph generate_barabasi_albert(int n, int m_attach, std::uint64_t seed);

} // namespace ske
