#ifndef SUPRA_TEMPORAL_NETWORK_HPP_
#define SUPRA_TEMPORAL_NETWORK_HPP_

#include <Eigen/SparseCore>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supra/graph.hpp"

namespace supra {

using SparseMatrix = Eigen::SparseMatrix<double>;
using LayerKey = std::int64_t;

// Bijection between node labels and contiguous 0-based indices. Label order is
// insertion order, which the loader makes first-appearance order in the file.
class NodeRegistry {
public:
    NodeRegistry() = default;
    explicit NodeRegistry(std::vector<std::string> labels);

    // Returns the index of `label`, registering it if new.
    Index add(const std::string &label);
    std::optional<Index> find(const std::string &label) const;
    Index index_of(const std::string &label) const; // throws std::out_of_range

    Index size() const { return static_cast<Index>(labels_.size()); }
    const std::string &label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string> &labels() const { return labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Index> index_;
};

// Discrete-time temporal network: one N x N nonnegative adjacency matrix per
// time layer over a node set shared by all layers. Entry (i,j) of layer t is
// the weight of the directed edge i -> j at time t. Immutable once built.
class TemporalNetwork {
public:
    // Validates: T >= 1, all layers N x N, weights finite and >= 0,
    // layer keys strictly increasing.
    TemporalNetwork(NodeRegistry registry, std::vector<SparseMatrix> layers,
                    std::vector<LayerKey> layer_keys);

    Index node_count() const { return registry_.size(); }
    Index layer_count() const { return static_cast<Index>(layers_.size()); }

    const NodeRegistry &registry() const { return registry_; }
    const SparseMatrix &layer(Index t) const { return layers_.at(static_cast<std::size_t>(t)); }
    const std::vector<SparseMatrix> &layers() const { return layers_; }
    const std::vector<LayerKey> &layer_keys() const { return layer_keys_; }

private:
    NodeRegistry registry_;
    std::vector<SparseMatrix> layers_;
    std::vector<LayerKey> layer_keys_;
};

// Elementwise sum over layers: the temporally aggregated adjacency matrix.
SparseMatrix aggregate(const TemporalNetwork &net);

struct ValidationReport {
    std::vector<Index> edges_per_layer;            // nonzero count per layer
    std::vector<Index> zero_out_degree_per_layer;  // dangling-node count per layer
    Index self_loop_count = 0;                     // nonzero diagonal entries, all layers
    bool aggregate_strongly_connected = false;
};

// Diagnostic report; never fails. The connectivity flag feeds the
// irreducibility precondition when layer centralities are not PageRank.
ValidationReport validate(const TemporalNetwork &net);

} // namespace supra

#endif // SUPRA_TEMPORAL_NETWORK_HPP_
