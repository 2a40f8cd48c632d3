#ifndef SUPRA_COUPLING_HPP_
#define SUPRA_COUPLING_HPP_

#include <Eigen/Dense>
#include <iosfwd>

#include "supra/graph.hpp"

namespace supra {

enum class CouplingTopology {
    UndirectedChain,
    DirectedChainTeleport,
    ReversedDirectedChainTeleport,
    Custom,
};

// T x T interlayer-adjacency matrix: entry (t,t') is the coupling weight from
// layer t to layer t'. gamma is the layer-teleportation rate for the directed
// variants and 0 otherwise.
struct InterlayerCoupling {
    Eigen::MatrixXd matrix;
    CouplingTopology topology = CouplingTopology::Custom;
    double gamma = 0.0;

    Index layer_count() const { return matrix.rows(); }
};

// A_{tt'} = 1 iff |t - t'| = 1.
InterlayerCoupling undirected_chain(Index t_count);

// A_{tt'} = 1 + gamma if t' - t = 1, gamma otherwise (diagonal included).
// Throws std::domain_error for gamma <= 0 or t_count < 1.
InterlayerCoupling directed_chain_teleport(Index t_count, double gamma);

// Transposes the matrix; the directed topology tags flip, the others persist.
InterlayerCoupling reverse(const InterlayerCoupling &c);

// Wraps an arbitrary square nonnegative finite matrix as topology Custom.
// Throws std::domain_error on negative/non-finite entries or non-square input.
InterlayerCoupling load_custom(Eigen::MatrixXd matrix);

// CSV: T rows of T comma-separated reals. JSON: dense array of arrays.
InterlayerCoupling coupling_from_csv(std::istream &in);
InterlayerCoupling coupling_from_json(std::istream &in);

bool is_strongly_connected(const InterlayerCoupling &c);

} // namespace supra

#endif // SUPRA_COUPLING_HPP_
