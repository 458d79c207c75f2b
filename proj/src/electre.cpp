#include "ske/electre.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ske/errors.hpp"

namespace ske {

Weights Weights::of(std::vector<double> w) {
    if (w.empty()) throw input_error("weights: need at least one criterion");
    double sum = 0.0;
    for (double v : w) {
        if (!(v >= 0.0)) throw input_error("weights: entries must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw input_error("weights: entries must sum to 1");
    return Weights{std::move(w)};
}

Weights Weights::local_global(double w_global) {
    if (!(w_global >= 0.0 && w_global <= 1.0))
        throw input_error("w_global must lie in [0, 1]");
    return Weights{{1.0 - w_global, w_global}};
}

double Weights::sum() const { return std::accumulate(w.begin(), w.end(), 0.0); }

DecisionMatrix build_decision_matrix(const std::vector<MetricVector>& metrics) {
    if (metrics.size() < 2)
        throw input_error("decision matrix: need at least two criteria");
    const size_t n = metrics.front().values.size();
    for (const auto& m : metrics)
        if (m.values.size() != n)
            throw input_error("decision matrix: criterion \"" + m.name +
                              "\" has mismatched length");
    DecisionMatrix x;
    x.rows = static_cast<int>(n);
    x.cols = static_cast<int>(metrics.size());
    x.values.resize(n * metrics.size());
    for (const auto& m : metrics) x.criterion_names.push_back(m.name);
    for (int i = 0; i < x.rows; ++i)
        for (int l = 0; l < x.cols; ++l) x.at(i, l) = metrics[l].values[i];
    return x;
}

DecisionMatrix normalize(const DecisionMatrix& x) {
    DecisionMatrix out = x;
    for (int l = 0; l < x.cols; ++l) {
        double lo = x.at(0, l), hi = x.at(0, l);
        for (int i = 1; i < x.rows; ++i) {
            lo = std::min(lo, x.at(i, l));
            hi = std::max(hi, x.at(i, l));
        }
        const double span = hi - lo;
        for (int i = 0; i < x.rows; ++i)
            out.at(i, l) = span > 0.0 ? (x.at(i, l) - lo) / span : 0.0;
    }
    return out;
}

DecisionMatrix apply_weights(const DecisionMatrix& x_star, const Weights& w) {
    if (static_cast<int>(w.w.size()) != x_star.cols)
        throw input_error("apply_weights: weight count does not match columns");
    DecisionMatrix r = x_star;
    for (int i = 0; i < r.rows; ++i)
        for (int l = 0; l < r.cols; ++l) r.at(i, l) = x_star.at(i, l) * w.w[l];
    return r;
}

namespace {

struct PairIndices {
    double c_ij, c_ji, d_ij, d_ji;
};

// Both directions of one row pair in a single criterion scan. Ties belong
// to the harmony set of both directions; the disharmony denominator is the
// largest criterion gap between the rows, and identical rows yield 0.
inline PairIndices pair_indices(const DecisionMatrix& r, const std::vector<double>& w,
                                double w_sum, int i, int j) {
    const double* ri = r.values.data() + static_cast<size_t>(i) * r.cols;
    const double* rj = r.values.data() + static_cast<size_t>(j) * r.cols;
    double c_ij = 0.0, c_ji = 0.0;
    double max_abs = 0.0, worst_i = 0.0, worst_j = 0.0;
    for (int l = 0; l < r.cols; ++l) {
        const double diff = ri[l] - rj[l];
        const double mag = std::abs(diff);
        if (diff >= 0.0) c_ij += w[l];
        if (diff <= 0.0) c_ji += w[l];
        if (mag > max_abs) max_abs = mag;
        if (diff < 0.0 && mag > worst_i) worst_i = mag;
        if (diff > 0.0 && mag > worst_j) worst_j = mag;
    }
    PairIndices out;
    out.c_ij = c_ij / w_sum;
    out.c_ji = c_ji / w_sum;
    out.d_ij = max_abs > 0.0 ? worst_i / max_abs : 0.0;
    out.d_ji = max_abs > 0.0 ? worst_j / max_abs : 0.0;
    return out;
}

} // namespace

SquareMatrix harmony_matrix(const DecisionMatrix& r, const Weights& w, Exec exec) {
    const int n = r.rows;
    const double w_sum = w.sum();
    SquareMatrix c{n, std::vector<double>(static_cast<size_t>(n) * n, 0.0)};
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double sum = 0.0;
            for (int l = 0; l < r.cols; ++l)
                if (r.at(i, l) - r.at(j, l) >= 0.0) sum += w.w[l];
            c.at(i, j) = sum / w_sum;
        }
    }
    return c;
}

SquareMatrix disharmony_matrix(const DecisionMatrix& r, Exec exec) {
    const int n = r.rows;
    SquareMatrix d{n, std::vector<double>(static_cast<size_t>(n) * n, 0.0)};
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double max_abs = 0.0, worst = 0.0;
            for (int l = 0; l < r.cols; ++l) {
                const double diff = r.at(i, l) - r.at(j, l);
                const double mag = std::abs(diff);
                if (mag > max_abs) max_abs = mag;
                if (diff < 0.0 && mag > worst) worst = mag;
            }
            d.at(i, j) = max_abs > 0.0 ? worst / max_abs : 0.0;
        }
    }
    return d;
}

SquareMatrix dominance_matrix(const SquareMatrix& c, const SquareMatrix& d) {
    if (c.n != d.n) throw input_error("dominance: shape mismatch");
    SquareMatrix u{c.n, std::vector<double>(c.values.size(), 0.0)};
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
            if (i != j) u.at(i, j) = c.at(i, j) - d.at(i, j);
    return u;
}

std::vector<double> net_dominance(const SquareMatrix& u) {
    std::vector<double> zeta(u.n, 0.0);
    for (int i = 0; i < u.n; ++i) {
        double z = 0.0;
        for (int j = 0; j < u.n; ++j)
            if (j != i) z += u.at(i, j) - u.at(j, i);
        zeta[i] = z;
    }
    return zeta;
}

std::vector<int> rank_descending(const std::vector<double>& zeta) {
    return ranking_from_scores(zeta);
}

FusionResult fuse(const DecisionMatrix& x, const Weights& w,
                  const FusionOptions& options) {
    if (x.rows < 1) throw input_error("fuse: empty decision matrix");
    if (static_cast<int>(w.w.size()) != x.cols)
        throw input_error("fuse: weight count does not match criteria");

    FusionResult res;
    res.normalized = normalize(x);
    res.weighted = apply_weights(res.normalized, w);
    const int n = x.rows;

    if (options.keep_matrices) {
        res.harmony = harmony_matrix(res.weighted, w, options.exec);
        res.disharmony = disharmony_matrix(res.weighted, options.exec);
        res.dominance = dominance_matrix(*res.harmony, *res.disharmony);
        res.net_dominance = net_dominance(*res.dominance);
    } else {
        // Streaming row kernel: identical arithmetic and summation order as
        // the matrix route, without the n^2 storage.
        res.net_dominance.assign(n, 0.0);
        const double w_sum = w.sum();
        const bool par = options.exec == Exec::parallel;
        auto* zeta = res.net_dominance.data();
#pragma omp parallel for schedule(static) if (par)
        for (int i = 0; i < n; ++i) {
            double z = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const auto p = pair_indices(res.weighted, w.w, w_sum, i, j);
                z += (p.c_ij - p.d_ij) - (p.c_ji - p.d_ji);
            }
            zeta[i] = z;
        }
    }
    res.ranking = rank_descending(res.net_dominance);
    return res;
}

FusionResult sk_e(const Graph& g, double w_global, const FusionOptions& options) {
    const auto x = build_decision_matrix({sd_local(g), ks_entropy(g)});
    return fuse(x, Weights::local_global(w_global), options);
}

} // namespace ske
