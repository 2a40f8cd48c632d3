#ifndef SUPRA_ASYMPTOTICS_HPP_
#define SUPRA_ASYMPTOTICS_HPP_

#include <vector>

#include "supra/coupling.hpp"
#include "supra/eigensolver.hpp"
#include "supra/supra_operator.hpp"

namespace supra {

struct LayerEigenpair {
    double value = 0.0; // dominant eigenvalue mu_1^(t)
    Vector left;        // u^(1,t), 1-norm normalized
    Vector right;       // v^(1,t), 1-norm normalized
};

// omega -> 0+ limit: layers decouple and the supra eigenvector collapses onto
// the blocks of the layers whose dominant eigenvalue attains the overall
// maximum, mixed by the Perron vector of the auxiliary T x T matrix
//   X_{tt'} = A~_{tt'} <u^(1,t), v^(1,t')> / <u^(1,t), v^(1,t)>
// restricted to that argmax set.
struct WeakLimit {
    std::vector<Index> top_layers; // the argmax set, ascending
    std::vector<LayerEigenpair> layer_eigs;
    Matrix x;            // T x T, zero outside top_layers x top_layers
    Vector alpha;        // length T, zero outside top_layers
    double lambda1 = 0.0; // dominant eigenvalue of X restricted to top_layers
    Vector limit_vector; // length NT, 1-norm normalized
};

WeakLimit weak_limit(const LayerCentralitySet &layers, const InterlayerCoupling &coupling,
                     const PowerOptions &options = {});

// omega -> infinity limit: layers aggregate. The node profile alpha~ is the
// Perron vector of X~_{ij} = sum_t C^(t)_{ij} u~_t v~_t / <u~, v~> and the
// layer profile is the dominant right eigenvector v~ of A~, so the joint
// centralities separate as W(i,t) -> alpha~_i v~_t.
struct StrongLimit {
    double mu1 = 0.0;    // dominant eigenvalue of A~ (limit of lambda_max(omega)/omega)
    Vector left;         // u~^(1) of A~, 1-norm normalized
    Vector right;        // v~^(1) of A~, 1-norm normalized
    Matrix aggregated;   // X~ (materialized when N <= dense threshold, else empty)
    Vector alpha;        // length N, Perron vector of X~
    double aggregated_eigenvalue = 0.0; // dominant eigenvalue of X~
    bool eigenvalue_matches_mu1 = true; // |aggregated_eigenvalue - mu1| <= 1e-6
    std::vector<Index> stride; // the node-major -> layer-major permutation used
    Vector limit_vector;       // length NT, 1-norm normalized
};

StrongLimit strong_limit(const LayerCentralitySet &layers, const InterlayerCoupling &coupling,
                         const PowerOptions &options = {});

// Tables from a limit vector. Unlike extract(), zero entries are legal: a
// weak limit vanishes on every layer outside the argmax set. Conditionals
// whose marginal is zero are reported as zero. Requires v >= 0, ||v||_1 > 0.
CentralityResult extract_limit(const Vector &v, double eigenvalue, Index node_count,
                               Index layer_count);

// 0-based stride permutation p with (P z)[k] = z[p[k]]: maps node-major
// vectorizations (N blocks of length T) to layer-major ones (T blocks of
// length N). From the 1-based rule l = ceil(k/N) + T*((k-1) mod N).
std::vector<Index> stride_permutation(Index node_count, Index layer_count);

// w_t = sin^2(pi t / (T+1)) normalized to sum 1: the layer weights the
// aggregated matrix X~ picks up for undirected-chain coupling.
Vector sin_squared_weights(Index layer_count);

} // namespace supra

#endif // SUPRA_ASYMPTOTICS_HPP_
