// Independent brute-force reference implementations used only by the test
// suite. Each one takes the most literal route available (explicit sets,
// exhaustive enumeration, naive loops) so it shares no code path with the
// library implementation it checks.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ske/graph.hpp"

namespace oracle {

// Graph over n nodes labeled "1".."n" (keeps isolated nodes).
ske::Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// ---- fusion (naive outranking, explicit sets) ----
struct NaiveFusion {
    std::vector<std::vector<double>> c, d, u;
    std::vector<double> zeta;
};
// x: raw decision matrix rows; w: criterion weights. Normalizes, weights and
// builds every index with plain loops.
NaiveFusion naive_fusion(const std::vector<std::vector<double>>& x,
                         const std::vector<double>& w);

// ---- k-shell by definition: largest k surviving iterated pruning ----
std::vector<int> brute_kshell(const ske::Graph& g);

// ---- betweenness via path-count DP over all pairs ----
std::vector<double> brute_betweenness(const ske::Graph& g);

// ---- mean shortest path via Floyd-Warshall (n <= ~60) ----
std::optional<double> floyd_warshall_mean_path(const ske::Graph& g);

// ---- exact SIR expectation by exhaustive outcome enumeration (tiny n, T) ----
std::vector<double> exact_sir_expected_f(const ske::Graph& g, double alpha,
                                         double beta, const std::vector<int>& seeds,
                                         int days);

// ---- exact IC by live-edge subset enumeration (2^m subsets) ----
double exact_ic_expected(const ske::Graph& g, const std::vector<int>& seeds, double p);
// distribution of the final active count
std::map<int, double> exact_ic_distribution(const ske::Graph& g,
                                            const std::vector<int>& seeds, double p);

// ---- dense symmetric eigenvalues via cyclic Jacobi rotations ----
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);

} // namespace oracle
