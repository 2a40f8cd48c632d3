#include "supra/supra_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "supra/errors.hpp"

namespace supra {

SupraOperator::SupraOperator(const LayerCentralitySet &layers, const InterlayerCoupling &coupling,
                             double omega)
    : layers_(&layers), coupling_(&coupling), omega_(omega), n_(layers.node_count),
      t_(layers.layer_count()) {
    if (coupling.layer_count() != t_) {
        throw std::domain_error("coupling is " + std::to_string(coupling.layer_count()) +
                                "x" + std::to_string(coupling.layer_count()) + " but there are " +
                                std::to_string(t_) + " layers");
    }
    if (!(omega >= 0.0) || !std::isfinite(omega)) {
        throw std::domain_error("omega must be finite and >= 0");
    }
    for (const auto &c : layers.matrices) {
        if (c.n() != n_) {
            throw std::domain_error("layer centrality matrices must share one dimension");
        }
    }
}

void SupraOperator::apply(const Vector &x, Vector &y) const {
    if (x.size() != dim()) {
        throw std::invalid_argument("supra matvec: expected length " + std::to_string(dim()));
    }
    y.resize(dim());
    for (Index t = 0; t < t_; ++t) {
        layers_->matrices[static_cast<std::size_t>(t)].apply(x.segment(t * n_, n_),
                                                             y.segment(t * n_, n_));
    }
    if (omega_ != 0.0) {
        Eigen::Map<const Matrix> blocks_in(x.data(), n_, t_);
        Eigen::Map<Matrix> blocks_out(y.data(), n_, t_);
        blocks_out.noalias() += omega_ * (blocks_in * coupling_->matrix.transpose());
    }
}

Vector SupraOperator::apply(const Vector &x) const {
    Vector y;
    apply(x, y);
    return y;
}

std::string PreconditionReport::describe() const {
    if (ok()) {
        return "all supracentrality preconditions hold";
    }
    std::string s = "supracentrality preconditions violated:";
    if (!coupling_strongly_connected) {
        s += " interlayer coupling is not strongly connected;";
    }
    if (!layer_sum_irreducible) {
        s += " sum of layer centrality matrices is reducible;";
    }
    if (!entries_nonnegative) {
        s += " negative entries present;";
    }
    s.pop_back();
    return s;
}

PreconditionReport check_preconditions(const SupraOperator &op) {
    PreconditionReport report;
    report.coupling_strongly_connected = is_strongly_connected(op.coupling());

    report.entries_nonnegative = op.coupling().matrix.minCoeff() >= 0.0;
    for (const auto &c : op.layers().matrices) {
        report.entries_nonnegative = report.entries_nonnegative && c.nonnegative();
    }

    // A positive teleportation term in any layer makes sum_t C^(t) positive.
    bool any_uniform = false;
    for (const auto &c : op.layers().matrices) {
        if (c.uniform_coeff() > 0.0) {
            any_uniform = true;
            break;
        }
    }
    if (any_uniform) {
        report.layer_sum_irreducible = true;
    } else {
        AdjacencyLists adj(static_cast<std::size_t>(op.node_count()));
        for (const auto &c : op.layers().matrices) {
            c.add_adjacency(adj);
        }
        report.layer_sum_irreducible = strongly_connected(adj);
    }
    return report;
}

EigenPair dominant_eigenpair(const SupraOperator &op, const PowerOptions &options) {
    if (op.omega() == 0.0) {
        throw PreconditionError(
            "omega = 0 decouples the layers and the dominant eigenvalue is degenerate; "
            "use the weak-coupling limit instead");
    }
    const PreconditionReport report = check_preconditions(op);
    if (!report.ok()) {
        throw PreconditionError(report.describe());
    }

    PowerOptions opts = options;
    opts.shift =
        1.0 + op.omega() * op.coupling().matrix.cwiseAbs().rowwise().sum().maxCoeff();
    EigenPair pair = power_iteration(
        op.dim(), [&op](const Vector &x, Vector &y) { op.apply(x, y); }, opts);
    if (!pair.converged) {
        throw ConvergenceError("power iteration did not reach tol " +
                                   std::to_string(opts.tol) + " after " +
                                   std::to_string(pair.iterations) + " iterations",
                               pair.iterations, pair.residual);
    }
    return pair;
}

CentralityResult extract(const Vector &v, double lambda, Index node_count, Index layer_count,
                         long iterations, double residual) {
    const Index n = node_count;
    const Index t = layer_count;
    if (v.size() != n * t) {
        throw std::domain_error("supra vector has wrong length");
    }
    if (v.minCoeff() <= 0.0) {
        throw std::domain_error("supra vector has nonpositive entries "
                                "(upstream solver failure?)");
    }
    CentralityResult r;
    r.lambda_max = lambda;
    r.iterations = iterations;
    r.residual = residual;
    r.joint = Eigen::Map<const Matrix>(v.data(), n, t) / v.lpNorm<1>();
    r.mlc = r.joint.colwise().sum().transpose();
    r.mnc = r.joint.rowwise().sum();
    r.cond_node = r.joint * r.mlc.cwiseInverse().asDiagonal();
    r.cond_layer = r.mnc.cwiseInverse().asDiagonal() * r.joint;
    return r;
}

std::vector<CentralityResult> sweep(const TemporalNetwork &net, const LayerCentralityKind &kind,
                                    const InterlayerCoupling &coupling,
                                    const std::vector<double> &omegas,
                                    const PowerOptions &options) {
    const LayerCentralitySet set = build_layer_set(net, kind);
    std::vector<CentralityResult> results;
    results.reserve(omegas.size());
    PowerOptions opts = options;
    for (double omega : omegas) {
        SupraOperator op(set, coupling, omega);
        const EigenPair pair = dominant_eigenpair(op, opts);
        results.push_back(extract(pair.vector, pair.value, set.node_count, set.layer_count(),
                                  pair.iterations, pair.residual));
        opts.start = pair.vector;
    }
    return results;
}

} // namespace supra
