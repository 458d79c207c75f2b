#include "ske/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ske/errors.hpp"

namespace ske {

Eigen::MatrixXd laplacian(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        l(v, v) = g.degree(v);
        for (int u : g.neighbors(v)) l(v, u) = -1.0;
    }
    return l;
}

double smallest_nonzero_eigenvalue(const Eigen::MatrixXd& m, double zero_tol) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw input_error("eigensolver: matrix must be square and non-empty");
    const double scale = m.cwiseAbs().maxCoeff();
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
        throw input_error("eigensolver: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_error("eigensolver did not converge");
    const auto& evs = solver.eigenvalues(); // ascending
    const double threshold = zero_tol * scale;
    for (Eigen::Index i = 0; i < evs.size(); ++i)
        if (evs[i] > threshold) return evs[i];
    throw numeric_error("matrix has no nonzero eigenvalue");
}

ControlReport constraint_efficiency(const Graph& g, std::span<const int> ranking,
                                    int q_max, Exec exec) {
    const int n = g.node_count();
    if (q_max < 1 || q_max >= n)
        throw input_error("constraint_efficiency: need 1 <= q_max < n");
    if (static_cast<int>(ranking.size()) < q_max)
        throw input_error("constraint_efficiency: ranking shorter than q_max");
    for (int v : ranking)
        if (v < 0 || v >= n)
            throw input_error("constraint_efficiency: ranking entry out of range");

    const Eigen::MatrixXd l = laplacian(g);
    std::vector<double> mu(q_max, 0.0);
    std::string failure;
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int q = 1; q <= q_max; ++q) {
        // keep everything but the top-q ranked nodes (cumulative grounding)
        std::vector<char> removed(n, 0);
        for (int i = 0; i < q; ++i) removed[ranking[i]] = 1;
        std::vector<int> keep;
        keep.reserve(n - q);
        for (int v = 0; v < n; ++v)
            if (!removed[v]) keep.push_back(v);
        const int k = static_cast<int>(keep.size());
        Eigen::MatrixXd sub(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) sub(a, b) = l(keep[a], keep[b]);
        try {
            mu[q - 1] = smallest_nonzero_eigenvalue(sub);
        } catch (const std::exception& e) {
#pragma omp critical
            if (failure.empty()) failure = e.what();
        }
    }
    if (!failure.empty()) throw numeric_error("constraint_efficiency: " + failure);

    ControlReport report;
    report.q_max = q_max;
    report.per_q.reserve(q_max);
    double inv_sum = 0.0;
    for (int q = 1; q <= q_max; ++q) {
        report.per_q.emplace_back(q, mu[q - 1]);
        inv_sum += 1.0 / mu[q - 1];
    }
    report.p_value = inv_sum / q_max;
    return report;
}

} // namespace ske
