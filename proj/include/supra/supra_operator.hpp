#ifndef SUPRA_SUPRA_OPERATOR_HPP_
#define SUPRA_SUPRA_OPERATOR_HPP_

#include <vector>

#include "supra/coupling.hpp"
#include "supra/eigensolver.hpp"
#include "supra/layer_centrality.hpp"

namespace supra {

// Matrix-free view of the NT x NT supracentrality operator
//   C(omega) = diag[C^(1),...,C^(T)] + omega * (A~ kron I).
// Vectors are layer-major: entry N*(t-1)+i is node i of layer t.
// Holds references; the layer set and coupling must outlive the operator.
class SupraOperator {
public:
    SupraOperator(const LayerCentralitySet &layers, const InterlayerCoupling &coupling,
                  double omega);

    Index node_count() const { return n_; }
    Index layer_count() const { return t_; }
    Index dim() const { return n_ * t_; }
    double omega() const { return omega_; }

    const LayerCentralitySet &layers() const { return *layers_; }
    const InterlayerCoupling &coupling() const { return *coupling_; }

    // y = C(omega) x; exactly the dense product, block by block in layer order.
    void apply(const Vector &x, Vector &y) const;
    Vector apply(const Vector &x) const;

private:
    const LayerCentralitySet *layers_;
    const InterlayerCoupling *coupling_;
    double omega_;
    Index n_, t_;
};

struct PreconditionReport {
    bool coupling_strongly_connected = false;
    bool layer_sum_irreducible = false;
    bool entries_nonnegative = false;

    bool ok() const {
        return coupling_strongly_connected && layer_sum_irreducible && entries_nonnegative;
    }
    std::string describe() const;
};

// The uniqueness/positivity preconditions: A~ strongly connected, sum_t C^(t)
// irreducible, everything nonnegative. PageRank layers pass (b)/(c) by
// positivity of the teleportation term.
PreconditionReport check_preconditions(const SupraOperator &op);

// Dominant eigenpair via shifted power iteration. The shift is
// 1 + omega * (max row sum of A~), which degenerates to the plain +1 shift as
// omega -> 0 and keeps the iteration primitive at any scale. Throws
// PreconditionError (including for omega == 0, where the dominant eigenvalue of
// a PageRank supracentrality matrix is T-fold degenerate) and ConvergenceError.
EigenPair dominant_eigenpair(const SupraOperator &op, const PowerOptions &options = {});

struct CentralityResult {
    double lambda_max = 0.0;
    Matrix joint;      // N x T, W(i,t)
    Vector mlc;        // length T, x_t = sum_i W(i,t)
    Vector mnc;        // length N, x^_i = sum_t W(i,t)
    Matrix cond_node;  // N x T, Z(i,t) = W(i,t)/x_t   (columns sum to 1)
    Matrix cond_layer; // N x T, Z^(i,t) = W(i,t)/x^_i (rows sum to 1)
    long iterations = 0;
    double residual = 0.0;
};

// Reshapes a positive 1-norm-normalized supra vector into joint, marginal and
// conditional centralities. Throws std::domain_error on nonpositive entries.
CentralityResult extract(const Vector &v, double lambda, Index node_count, Index layer_count,
                         long iterations = 0, double residual = 0.0);

// One solve per omega; each previous eigenvector warm-starts the next solve
// (a speedup only -- results are warm-start-invariant within tolerance).
std::vector<CentralityResult> sweep(const TemporalNetwork &net, const LayerCentralityKind &kind,
                                    const InterlayerCoupling &coupling,
                                    const std::vector<double> &omegas,
                                    const PowerOptions &options = {});

} // namespace supra

#endif // SUPRA_SUPRA_OPERATOR_HPP_
