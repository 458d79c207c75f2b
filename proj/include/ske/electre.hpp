#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ske/centrality.hpp"
#include "ske/exec.hpp"
#include "ske/graph.hpp"

namespace ske {

// Row-major n x k criteria matrix (rows = alternatives/nodes).
struct DecisionMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;
    std::vector<std::string> criterion_names;

    double at(int i, int l) const { return values[static_cast<size_t>(i) * cols + l]; }
    double& at(int i, int l) { return values[static_cast<size_t>(i) * cols + l]; }
};

// Nonnegative criterion weights summing to 1 (checked to 1e-12).
struct Weights {
    std::vector<double> w;

    static Weights of(std::vector<double> w);
    // Two-criteria split: (1 - w_global) on the local column, w_global on
    // the global column.
    static Weights local_global(double w_global);

    double sum() const;
};

struct SquareMatrix {
    int n = 0;
    std::vector<double> values;

    double at(int i, int j) const { return values[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return values[static_cast<size_t>(i) * n + j]; }
};

struct FusionOptions {
    bool keep_matrices = false; // materialize C, D, U (n^2 each)
    Exec exec = Exec::parallel;
};

struct FusionResult {
    DecisionMatrix normalized; // X*, min-max scaled per column
    DecisionMatrix weighted;   // R = X* scaled by weights
    std::optional<SquareMatrix> harmony;    // C
    std::optional<SquareMatrix> disharmony; // D
    std::optional<SquareMatrix> dominance;  // U = C - D
    std::vector<double> net_dominance;      // zeta, sums to 0
    std::vector<int> ranking;               // descending zeta, ties by index
};

// Column l of the result is the l-th metric vector. All vectors must share
// one length; at least two metrics are required.
DecisionMatrix build_decision_matrix(const std::vector<MetricVector>& metrics);

// Per-column min-max scaling to [0, 1]. A constant column carries no
// discriminating information and maps to all zeros, which keeps it tied in
// every pairwise comparison.
DecisionMatrix normalize(const DecisionMatrix& x);

DecisionMatrix apply_weights(const DecisionMatrix& x_star, const Weights& w);

// Pairwise outranking indices on the weighted matrix R.
//
// Harmony c_ij: total weight of criteria where row i scores at least row j
// (ties count for both directions), divided by the total weight. The
// diagonal is forced to 0.
SquareMatrix harmony_matrix(const DecisionMatrix& r, const Weights& w,
                            Exec exec = Exec::parallel);

// Disharmony d_ij: the largest margin by which row i loses a criterion to
// row j, relative to the largest margin between the two rows on any
// criterion. 0 when i loses nowhere or the rows are identical.
SquareMatrix disharmony_matrix(const DecisionMatrix& r, Exec exec = Exec::parallel);

SquareMatrix dominance_matrix(const SquareMatrix& c, const SquareMatrix& d);

// zeta_i = sum over k != i of (u_ik - u_ki); antisymmetry makes the zetas
// sum to zero.
std::vector<double> net_dominance(const SquareMatrix& u);

std::vector<int> rank_descending(const std::vector<double>& zeta);

// Full pipeline on an explicit decision matrix: normalize, weight, pairwise
// harmony/disharmony/dominance, net dominance, rank. The streaming path
// never materializes the n x n matrices unless keep_matrices is set; either
// way the zetas are bit-identical.
FusionResult fuse(const DecisionMatrix& x, const Weights& w,
                  const FusionOptions& options = {});

// The SK-E ranking: SD (local) and k-shell entropy (global) fused with
// weights (1 - w_global, w_global).
FusionResult sk_e(const Graph& g, double w_global, const FusionOptions& options = {});

} // namespace ske
