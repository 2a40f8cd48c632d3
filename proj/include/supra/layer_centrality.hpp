#ifndef SUPRA_LAYER_CENTRALITY_HPP_
#define SUPRA_LAYER_CENTRALITY_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <vector>

#include "supra/temporal_network.hpp"

namespace supra {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class CentralityFamily { PageRank, Eigenvector, Hub, Authority };

// How pagerank_matrix treats nodes with zero out-degree.
enum class DanglingPolicy { Uniform, SelfLoop, Error };

struct LayerCentralityKind {
    CentralityFamily family = CentralityFamily::PageRank;
    double sigma = 0.85;                              // node-teleportation parameter
    DanglingPolicy dangling = DanglingPolicy::Uniform;
    // PageRank matrices with n <= dense_threshold are materialized; larger ones
    // stay sparse-plus-rank-one and the teleportation term is applied per matvec.
    Index dense_threshold = 2048;
};

// One layer's centrality matrix C = S + (uniform/n) 1 1^T + (dangling/n) 1 d^T,
// where d marks dangling columns. The rank-one terms are implicit so that the
// dense all-to-all teleportation block never has to be stored at large n.
class CentralityMatrix {
public:
    CentralityMatrix() = default;
    CentralityMatrix(SparseMatrix sparse, double uniform_coeff, double dangling_coeff,
                     Vector dangling_mask, Index dense_threshold);
    explicit CentralityMatrix(SparseMatrix sparse)
        : CentralityMatrix(std::move(sparse), 0.0, 0.0, Vector(), 0) {}

    Index n() const { return sparse_.rows(); }

    void apply(Eigen::Ref<const Vector> x, Eigen::Ref<Vector> y) const;           // y = C x
    void apply_transpose(Eigen::Ref<const Vector> x, Eigen::Ref<Vector> y) const; // y = C^T x

    Matrix dense() const; // materialized copy (cached one when present)

    const SparseMatrix &sparse_part() const { return sparse_; }
    double uniform_coeff() const { return uniform_coeff_; }
    double dangling_coeff() const { return dangling_coeff_; }
    const Vector &dangling_mask() const { return dangling_mask_; }
    bool dense_cached() const { return dense_.size() > 0; }

    bool nonnegative() const;
    double max_row_sum() const; // upper bound on the spectral radius
    // Adds this matrix's digraph edges (i -> j for every structural nonzero).
    void add_adjacency(AdjacencyLists &adj) const;

private:
    SparseMatrix sparse_;
    double uniform_coeff_ = 0.0;
    double dangling_coeff_ = 0.0;
    Vector dangling_mask_; // size n when dangling_coeff_ != 0, else empty
    Matrix dense_;         // nonempty iff n <= dense_threshold at construction
};

// PageRank (Google) matrix: sigma A^T D^{-1} + (1-sigma)/n 1 1^T with D the
// out-degree diagonal. Columns of dangling nodes are fixed per `policy`.
// Result is column-stochastic. Throws std::domain_error for sigma outside (0,1)
// or for a dangling node under DanglingPolicy::Error.
CentralityMatrix pagerank_matrix(const SparseMatrix &a, double sigma,
                                 DanglingPolicy policy = DanglingPolicy::Uniform,
                                 Index dense_threshold = 2048);

CentralityMatrix eigenvector_matrix(const SparseMatrix &a); // C = A
CentralityMatrix hub_matrix(const SparseMatrix &a);         // C = A A^T
CentralityMatrix authority_matrix(const SparseMatrix &a);   // C = A^T A

struct LayerCentralitySet {
    LayerCentralityKind kind;
    std::vector<CentralityMatrix> matrices; // one per layer
    Index node_count = 0;

    Index layer_count() const { return static_cast<Index>(matrices.size()); }
};

// Applies the chosen constructor to every layer independently.
LayerCentralitySet build_layer_set(const TemporalNetwork &net, const LayerCentralityKind &kind);

} // namespace supra

#endif // SUPRA_LAYER_CENTRALITY_HPP_
