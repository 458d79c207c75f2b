#pragma once

#include <string>
#include <vector>

#include "ske/exec.hpp"
#include "ske/graph.hpp"

namespace ske {

// Per-node scores, index-aligned with the graph. Larger is always better
// for every metric produced here.
struct MetricVector {
    std::string name;
    std::vector<double> values;
};

// Local metric: exp(degree / max degree). Ranges over [1, e] and is a
// strictly increasing function of degree; an edgeless graph scores 1 for
// every node.
MetricVector sd_local(const Graph& g);

// Core decomposition: shell(v) is the largest k such that v survives
// repeated removal of all nodes of residual degree < k. Isolated nodes get
// shell 0.
std::vector<int> k_shell_indices(const Graph& g);
MetricVector k_shell(const Graph& g);

// Global metric: with x = shell(v) / sum of neighbor shells, the score is
// -x*ln(x), taken as 0 when x = 1 or when either the shell or the neighbor
// sum is 0. Values lie in [0, 1/e].
MetricVector ks_entropy(const Graph& g);

// Raw degree.
MetricVector degree_centrality(const Graph& g);

// Component-scaled closeness: ((r-1)/(n-1)) * ((r-1)/sum of distances)
// with r the size of v's component; isolated nodes score 0. Behaves
// sensibly on disconnected graphs.
MetricVector closeness_centrality(const Graph& g, Exec exec = Exec::parallel);

// Exact shortest-path betweenness over unordered pairs (no normalization),
// Brandes-style accumulation parallelized over sources.
MetricVector betweenness_centrality(const Graph& g, Exec exec = Exec::parallel);

// Collective influence at the given radius:
// (deg(v)-1) * sum of (deg(u)-1) over nodes u at exactly that distance.
MetricVector collective_influence(const Graph& g, int radius = 2,
                                  Exec exec = Exec::parallel);

// Descending-score order; equal scores resolve to ascending node index.
std::vector<int> ranking_from_scores(const std::vector<double>& scores);

} // namespace ske
