#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ske/exec.hpp"
#include "ske/graph.hpp"

namespace ske {

// Dense combinatorial Laplacian: degree on the diagonal, -1 per edge.
// Symmetric, rows sum to zero, positive semidefinite.
Eigen::MatrixXd laplacian(const Graph& g);

// Smallest eigenvalue exceeding zero_tol * max|entry| of a symmetric PSD
// matrix. Throws input_error for non-symmetric input and numeric_error when
// the solver fails or every eigenvalue is within tolerance of zero.
double smallest_nonzero_eigenvalue(const Eigen::MatrixXd& m, double zero_tol = 1e-9);

// Constraint efficiency of a ranking: ground the top-Q nodes cumulatively
// for Q = 1..q_max, take the smallest nonzero eigenvalue mu1 of each
// grounded Laplacian, and average 1/mu1. Smaller P means the ranked nodes
// pin the network down faster.
struct ControlReport {
    int q_max = 0;
    std::vector<std::pair<int, double>> per_q; // (Q, mu1)
    double p_value = 0.0;                      // mean of 1/mu1
};

ControlReport constraint_efficiency(const Graph& g, std::span<const int> ranking,
                                    int q_max, Exec exec = Exec::parallel);

} // namespace ske
