#include "supra/layer_centrality.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace supra {

CentralityMatrix::CentralityMatrix(SparseMatrix sparse, double uniform_coeff,
                                   double dangling_coeff, Vector dangling_mask,
                                   Index dense_threshold)
    : sparse_(std::move(sparse)), uniform_coeff_(uniform_coeff),
      dangling_coeff_(dangling_coeff), dangling_mask_(std::move(dangling_mask)) {
    if (sparse_.rows() != sparse_.cols()) {
        throw std::domain_error("centrality matrix must be square");
    }
    if (dangling_coeff_ != 0.0 && dangling_mask_.size() != sparse_.rows()) {
        throw std::domain_error("dangling mask size mismatch");
    }
    if (n() <= dense_threshold) {
        Matrix d = Matrix(sparse_);
        const Index nn = n();
        if (uniform_coeff_ != 0.0) {
            d.array() += uniform_coeff_ / static_cast<double>(nn);
        }
        if (dangling_coeff_ != 0.0) {
            for (Index j = 0; j < nn; ++j) {
                if (dangling_mask_[j] != 0.0) {
                    d.col(j).array() += dangling_coeff_ / static_cast<double>(nn);
                }
            }
        }
        dense_ = std::move(d);
    }
}

void CentralityMatrix::apply(Eigen::Ref<const Vector> x, Eigen::Ref<Vector> y) const {
    if (x.size() != n()) {
        throw std::invalid_argument("centrality matvec: dimension mismatch");
    }
    if (dense_cached()) {
        y.noalias() = dense_ * x;
        return;
    }
    y.noalias() = sparse_ * x;
    double boost = 0.0;
    if (uniform_coeff_ != 0.0) {
        boost += uniform_coeff_ * x.sum();
    }
    if (dangling_coeff_ != 0.0) {
        boost += dangling_coeff_ * dangling_mask_.dot(x);
    }
    if (boost != 0.0) {
        y.array() += boost / static_cast<double>(n());
    }
}

void CentralityMatrix::apply_transpose(Eigen::Ref<const Vector> x, Eigen::Ref<Vector> y) const {
    if (x.size() != n()) {
        throw std::invalid_argument("centrality matvec: dimension mismatch");
    }
    if (dense_cached()) {
        y.noalias() = dense_.transpose() * x;
        return;
    }
    y.noalias() = sparse_.transpose() * x;
    const double xsum = x.sum();
    if (uniform_coeff_ != 0.0) {
        y.array() += uniform_coeff_ * xsum / static_cast<double>(n());
    }
    if (dangling_coeff_ != 0.0) {
        y += (dangling_coeff_ * xsum / static_cast<double>(n())) * dangling_mask_;
    }
}

Matrix CentralityMatrix::dense() const {
    if (dense_cached()) {
        return dense_;
    }
    Matrix d = Matrix(sparse_);
    if (uniform_coeff_ != 0.0) {
        d.array() += uniform_coeff_ / static_cast<double>(n());
    }
    if (dangling_coeff_ != 0.0) {
        for (Index j = 0; j < n(); ++j) {
            if (dangling_mask_[j] != 0.0) {
                d.col(j).array() += dangling_coeff_ / static_cast<double>(n());
            }
        }
    }
    return d;
}

bool CentralityMatrix::nonnegative() const {
    if (uniform_coeff_ < 0.0 || dangling_coeff_ < 0.0) {
        return false;
    }
    for (Index k = 0; k < sparse_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(sparse_, k); it; ++it) {
            if (it.value() < 0.0 || !std::isfinite(it.value())) {
                return false;
            }
        }
    }
    return true;
}

double CentralityMatrix::max_row_sum() const {
    Vector row_sums = Vector::Zero(n());
    for (Index k = 0; k < sparse_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(sparse_, k); it; ++it) {
            row_sums[it.row()] += std::abs(it.value());
        }
    }
    double extra = std::abs(uniform_coeff_);
    if (dangling_coeff_ != 0.0) {
        extra += std::abs(dangling_coeff_) * dangling_mask_.sum() / static_cast<double>(n());
    }
    return row_sums.maxCoeff() + extra;
}

void CentralityMatrix::add_adjacency(AdjacencyLists &adj) const {
    for (Index k = 0; k < sparse_.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(sparse_, k); it; ++it) {
            if (it.value() != 0.0) {
                adj[static_cast<std::size_t>(it.row())].push_back(it.col());
            }
        }
    }
    if (dangling_coeff_ != 0.0) {
        for (Index j = 0; j < n(); ++j) {
            if (dangling_mask_[j] != 0.0) {
                for (Index i = 0; i < n(); ++i) {
                    adj[static_cast<std::size_t>(i)].push_back(j);
                }
            }
        }
    }
}

CentralityMatrix pagerank_matrix(const SparseMatrix &a, double sigma, DanglingPolicy policy,
                                 Index dense_threshold) {
    if (!(sigma > 0.0 && sigma < 1.0)) {
        throw std::domain_error("pagerank sigma must lie in (0,1)");
    }
    const Index n = a.rows();
    SparseMatrix work = a;

    Vector out_degree = Vector::Zero(n);
    for (Index k = 0; k < work.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(work, k); it; ++it) {
            if (it.value() < 0.0) {
                throw std::domain_error("pagerank needs a nonnegative adjacency matrix");
            }
            out_degree[it.row()] += it.value();
        }
    }

    Vector dangling = Vector::Zero(n);
    Index dangling_count = 0;
    for (Index i = 0; i < n; ++i) {
        if (out_degree[i] == 0.0) {
            dangling[i] = 1.0;
            ++dangling_count;
        }
    }
    if (dangling_count > 0) {
        switch (policy) {
        case DanglingPolicy::Error: {
            Index first = 0;
            while (dangling[first] == 0.0) {
                ++first;
            }
            throw std::domain_error("node " + std::to_string(first) +
                                    " has zero out-degree (dangling) and policy is 'error'");
        }
        case DanglingPolicy::SelfLoop: {
            SparseMatrix loops(n, n);
            std::vector<Eigen::Triplet<double>> triplets;
            for (Index i = 0; i < n; ++i) {
                if (dangling[i] != 0.0) {
                    triplets.emplace_back(i, i, 1.0);
                    out_degree[i] = 1.0;
                }
            }
            loops.setFromTriplets(triplets.begin(), triplets.end());
            work += loops;
            dangling.setZero();
            dangling_count = 0;
            break;
        }
        case DanglingPolicy::Uniform:
            break; // handled by the implicit (sigma/n) 1 d^T term
        }
    }

    // sigma * A^T D^{-1}: scale row i of A by sigma/d_i, then transpose.
    SparseMatrix scaled = work;
    for (Index k = 0; k < scaled.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(scaled, k); it; ++it) {
            it.valueRef() = sigma * it.value() / out_degree[it.row()];
        }
    }
    SparseMatrix transition = SparseMatrix(scaled.transpose());

    return CentralityMatrix(std::move(transition), 1.0 - sigma,
                            dangling_count > 0 ? sigma : 0.0,
                            dangling_count > 0 ? dangling : Vector(), dense_threshold);
}

CentralityMatrix eigenvector_matrix(const SparseMatrix &a) {
    return CentralityMatrix(a);
}

CentralityMatrix hub_matrix(const SparseMatrix &a) {
    SparseMatrix m = a * SparseMatrix(a.transpose());
    m.prune(0.0);
    return CentralityMatrix(std::move(m));
}

CentralityMatrix authority_matrix(const SparseMatrix &a) {
    SparseMatrix m = SparseMatrix(a.transpose()) * a;
    m.prune(0.0);
    return CentralityMatrix(std::move(m));
}

LayerCentralitySet build_layer_set(const TemporalNetwork &net, const LayerCentralityKind &kind) {
    LayerCentralitySet set;
    set.kind = kind;
    set.node_count = net.node_count();
    set.matrices.reserve(static_cast<std::size_t>(net.layer_count()));
    for (Index t = 0; t < net.layer_count(); ++t) {
        switch (kind.family) {
        case CentralityFamily::PageRank:
            set.matrices.push_back(
                pagerank_matrix(net.layer(t), kind.sigma, kind.dangling, kind.dense_threshold));
            break;
        case CentralityFamily::Eigenvector:
            set.matrices.push_back(eigenvector_matrix(net.layer(t)));
            break;
        case CentralityFamily::Hub:
            set.matrices.push_back(hub_matrix(net.layer(t)));
            break;
        case CentralityFamily::Authority:
            set.matrices.push_back(authority_matrix(net.layer(t)));
            break;
        }
    }
    return set;
}

} // namespace supra
