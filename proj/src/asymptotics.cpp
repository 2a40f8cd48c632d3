#include "supra/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "supra/errors.hpp"

namespace supra {

namespace {

constexpr Index kDenseFallbackDim = 64;

// Single convergence code path for the auxiliary dominant-eigenpair solves:
// power iteration first; for small matrices a dense eigendecomposition
// supplies the simplicity check and replaces a stalled iteration.
EigenPair aux_eigenpair(Index n, const ApplyFn &apply, double shift,
                        const std::function<Matrix()> &densify, const PowerOptions &base,
                        const std::string &what) {
    PowerOptions opts = base;
    opts.shift = shift;
    opts.start.resize(0);
    EigenPair pair = power_iteration(n, apply, opts);
    if (n <= kDenseFallbackDim && densify) {
        const DenseEigenResult dense = dominant_eigen_dense(densify());
        if (!dense.simple) {
            throw PreconditionError(what + ": dominant eigenvalue is not simple");
        }
        if (!pair.converged) {
            pair = dense.pair;
        }
    }
    if (!pair.converged) {
        throw ConvergenceError(what + ": eigensolve did not converge (possible eigenvalue tie)",
                               pair.iterations, pair.residual);
    }
    return pair;
}

EigenPair aux_eigenpair(const Matrix &m, const PowerOptions &base, const std::string &what) {
    const double shift = 1.0 + m.cwiseAbs().rowwise().sum().maxCoeff();
    return aux_eigenpair(
        m.rows(), [&m](const Vector &x, Vector &y) { y.noalias() = m * x; }, shift,
        [&m]() { return m; }, base, what);
}

} // namespace

WeakLimit weak_limit(const LayerCentralitySet &layers, const InterlayerCoupling &coupling,
                     const PowerOptions &options) {
    const Index n = layers.node_count;
    const Index t_count = layers.layer_count();
    if (coupling.layer_count() != t_count) {
        throw std::domain_error("coupling dimension does not match layer count");
    }
    if (!is_strongly_connected(coupling)) {
        throw PreconditionError("weak limit needs a strongly connected interlayer coupling");
    }

    WeakLimit limit;
    limit.layer_eigs.reserve(static_cast<std::size_t>(t_count));
    for (Index t = 0; t < t_count; ++t) {
        const CentralityMatrix &c = layers.matrices[static_cast<std::size_t>(t)];
        const double shift = 1.0 + c.max_row_sum();
        std::function<Matrix()> densify;
        if (n <= kDenseFallbackDim) {
            densify = [&c]() { return c.dense(); };
        }
        const std::string where = "layer " + std::to_string(t);
        EigenPair right = aux_eigenpair(
            n, [&c](const Vector &x, Vector &y) { c.apply(x, y); }, shift, densify, options,
            where);
        std::function<Matrix()> densify_t;
        if (densify) {
            densify_t = [&c]() { return Matrix(c.dense().transpose()); };
        }
        EigenPair left = aux_eigenpair(
            n, [&c](const Vector &x, Vector &y) { c.apply_transpose(x, y); }, shift, densify_t,
            options, where + " (left)");
        limit.layer_eigs.push_back({right.value, std::move(left.vector), std::move(right.vector)});
    }

    double mu_max = limit.layer_eigs[0].value;
    for (const auto &e : limit.layer_eigs) {
        mu_max = std::max(mu_max, e.value);
    }
    // relative tolerance: PageRank layers have mu = 1 analytically but differ in
    // the last bits numerically
    const double tie_band = 1e-9 * std::max(1.0, std::abs(mu_max));
    for (Index t = 0; t < t_count; ++t) {
        if (limit.layer_eigs[static_cast<std::size_t>(t)].value >= mu_max - tie_band) {
            limit.top_layers.push_back(t);
        }
    }

    limit.x = Matrix::Zero(t_count, t_count);
    for (Index t : limit.top_layers) {
        const auto &row_eig = limit.layer_eigs[static_cast<std::size_t>(t)];
        const double denom = row_eig.left.dot(row_eig.right);
        if (!(std::abs(denom) > 0.0)) {
            throw PreconditionError("layer " + std::to_string(t) +
                                    ": left/right eigenvectors are orthogonal");
        }
        for (Index tp : limit.top_layers) {
            const auto &col_eig = limit.layer_eigs[static_cast<std::size_t>(tp)];
            limit.x(t, tp) = coupling.matrix(t, tp) * row_eig.left.dot(col_eig.right) / denom;
        }
    }

    const Index p = static_cast<Index>(limit.top_layers.size());
    Matrix x_p(p, p);
    for (Index a = 0; a < p; ++a) {
        for (Index b = 0; b < p; ++b) {
            x_p(a, b) = limit.x(limit.top_layers[static_cast<std::size_t>(a)],
                                limit.top_layers[static_cast<std::size_t>(b)]);
        }
    }
    if (p > 1 && !strongly_connected(x_p)) {
        throw PreconditionError("auxiliary matrix X restricted to the argmax layers is reducible");
    }
    EigenPair alpha_pair = aux_eigenpair(x_p, options, "auxiliary matrix X");
    limit.lambda1 = alpha_pair.value;

    limit.alpha = Vector::Zero(t_count);
    limit.limit_vector = Vector::Zero(n * t_count);
    for (Index a = 0; a < p; ++a) {
        const Index t = limit.top_layers[static_cast<std::size_t>(a)];
        limit.alpha[t] = alpha_pair.vector[a];
        limit.limit_vector.segment(t * n, n) =
            alpha_pair.vector[a] * limit.layer_eigs[static_cast<std::size_t>(t)].right;
    }
    const double norm = limit.limit_vector.lpNorm<1>();
    limit.limit_vector /= norm;
    limit.alpha /= norm; // per-layer eigenvectors have unit 1-norm, so x_t = alpha_t
    return limit;
}

StrongLimit strong_limit(const LayerCentralitySet &layers, const InterlayerCoupling &coupling,
                         const PowerOptions &options) {
    const Index n = layers.node_count;
    const Index t_count = layers.layer_count();
    if (coupling.layer_count() != t_count) {
        throw std::domain_error("coupling dimension does not match layer count");
    }
    if (!is_strongly_connected(coupling)) {
        throw PreconditionError("strong limit needs a strongly connected interlayer coupling");
    }

    StrongLimit limit;
    EigenPair right = aux_eigenpair(coupling.matrix, options, "interlayer coupling");
    EigenPair left =
        aux_eigenpair(Matrix(coupling.matrix.transpose()), options, "interlayer coupling (left)");
    limit.mu1 = right.value;
    limit.right = std::move(right.vector);
    limit.left = std::move(left.vector);

    const double denom = limit.left.dot(limit.right);
    if (!(std::abs(denom) > 0.0)) {
        throw PreconditionError("coupling left/right eigenvectors are orthogonal");
    }
    Vector weights = limit.left.cwiseProduct(limit.right) / denom;

    const auto apply_aggregated = [&layers, &weights, t_count](const Vector &x, Vector &y) {
        y.setZero(x.size());
        Vector tmp(x.size());
        for (Index t = 0; t < t_count; ++t) {
            layers.matrices[static_cast<std::size_t>(t)].apply(x, tmp);
            y += weights[t] * tmp;
        }
    };
    if (n <= layers.kind.dense_threshold) {
        limit.aggregated = Matrix::Zero(n, n);
        for (Index t = 0; t < t_count; ++t) {
            limit.aggregated += weights[t] * layers.matrices[static_cast<std::size_t>(t)].dense();
        }
    }

    double shift = 1.0;
    for (const auto &c : layers.matrices) {
        shift = std::max(shift, 1.0 + c.max_row_sum());
    }
    std::function<Matrix()> densify;
    if (n <= kDenseFallbackDim) {
        densify = [&limit, &layers, &weights, t_count]() {
            if (limit.aggregated.size() > 0) {
                return limit.aggregated;
            }
            Matrix x_agg = Matrix::Zero(layers.node_count, layers.node_count);
            for (Index t = 0; t < t_count; ++t) {
                x_agg += weights[t] * layers.matrices[static_cast<std::size_t>(t)].dense();
            }
            return x_agg;
        };
    }
    EigenPair alpha_pair =
        aux_eigenpair(n, apply_aggregated, shift, densify, options, "aggregated matrix");
    limit.alpha = std::move(alpha_pair.vector);
    limit.aggregated_eigenvalue = alpha_pair.value;
    limit.eigenvalue_matches_mu1 = std::abs(alpha_pair.value - limit.mu1) <= 1e-6;

    // node-major Kronecker vector alpha (x) v~, sent to layer-major order by
    // the stride permutation
    limit.stride = stride_permutation(n, t_count);
    Vector node_major(n * t_count);
    for (Index j = 0; j < n; ++j) {
        node_major.segment(j * t_count, t_count) = limit.alpha[j] * limit.right;
    }
    limit.limit_vector.resize(n * t_count);
    for (Index k = 0; k < n * t_count; ++k) {
        limit.limit_vector[k] = node_major[limit.stride[static_cast<std::size_t>(k)]];
    }
    limit.limit_vector /= limit.limit_vector.lpNorm<1>();
    return limit;
}

CentralityResult extract_limit(const Vector &v, double eigenvalue, Index node_count,
                               Index layer_count) {
    if (v.size() != node_count * layer_count) {
        throw std::domain_error("limit vector has wrong length");
    }
    if (v.minCoeff() < 0.0) {
        throw std::domain_error("limit vector has negative entries");
    }
    const double norm = v.lpNorm<1>();
    if (!(norm > 0.0)) {
        throw std::domain_error("limit vector is zero");
    }
    CentralityResult r;
    r.lambda_max = eigenvalue;
    r.joint = Eigen::Map<const Matrix>(v.data(), node_count, layer_count) / norm;
    r.mlc = r.joint.colwise().sum().transpose();
    r.mnc = r.joint.rowwise().sum();
    r.cond_node = Matrix::Zero(node_count, layer_count);
    r.cond_layer = Matrix::Zero(node_count, layer_count);
    for (Index t = 0; t < layer_count; ++t) {
        if (r.mlc[t] > 0.0) {
            r.cond_node.col(t) = r.joint.col(t) / r.mlc[t];
        }
    }
    for (Index i = 0; i < node_count; ++i) {
        if (r.mnc[i] > 0.0) {
            r.cond_layer.row(i) = r.joint.row(i) / r.mnc[i];
        }
    }
    return r;
}

std::vector<Index> stride_permutation(Index node_count, Index layer_count) {
    if (node_count < 1 || layer_count < 1) {
        throw std::domain_error("stride permutation needs positive dimensions");
    }
    const Index total = node_count * layer_count;
    std::vector<Index> perm(static_cast<std::size_t>(total));
    for (Index k = 0; k < total; ++k) {
        // 1-based: l = ceil(k1/N) + T*((k1-1) mod N)
        perm[static_cast<std::size_t>(k)] = k / node_count + layer_count * (k % node_count);
    }
    return perm;
}

Vector sin_squared_weights(Index layer_count) {
    if (layer_count < 1) {
        throw std::domain_error("need at least one layer");
    }
    Vector w(layer_count);
    for (Index t = 0; t < layer_count; ++t) {
        const double s =
            std::sin(std::numbers::pi * static_cast<double>(t + 1) /
                     static_cast<double>(layer_count + 1));
        w[t] = s * s;
    }
    return w / w.sum();
}

} // namespace supra
