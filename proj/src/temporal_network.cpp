#include "supra/temporal_network.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace supra {

NodeRegistry::NodeRegistry(std::vector<std::string> labels) {
    for (auto &label : labels) {
        add(label);
    }
}

Index NodeRegistry::add(const std::string &label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<Index>(labels_.size()));
    if (inserted) {
        labels_.push_back(label);
    }
    return it->second;
}

std::optional<Index> NodeRegistry::find(const std::string &label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Index NodeRegistry::index_of(const std::string &label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        throw std::out_of_range("unknown node label: " + label);
    }
    return it->second;
}

TemporalNetwork::TemporalNetwork(NodeRegistry registry, std::vector<SparseMatrix> layers,
                                 std::vector<LayerKey> layer_keys)
    : registry_(std::move(registry)), layers_(std::move(layers)),
      layer_keys_(std::move(layer_keys)) {
    if (layers_.empty()) {
        throw std::domain_error("temporal network needs at least one layer");
    }
    if (layer_keys_.size() != layers_.size()) {
        throw std::domain_error("layer key count does not match layer count");
    }
    const Index n = registry_.size();
    for (std::size_t t = 0; t < layers_.size(); ++t) {
        const SparseMatrix &a = layers_[t];
        if (a.rows() != n || a.cols() != n) {
            throw std::domain_error("layer " + std::to_string(t) + " is not " +
                                    std::to_string(n) + "x" + std::to_string(n));
        }
        for (Index k = 0; k < a.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
                if (!(it.value() >= 0.0) || !std::isfinite(it.value())) {
                    throw std::domain_error("layer weights must be finite and nonnegative");
                }
            }
        }
        if (t > 0 && layer_keys_[t] <= layer_keys_[t - 1]) {
            throw std::domain_error("layer keys must be strictly increasing");
        }
    }
}

SparseMatrix aggregate(const TemporalNetwork &net) {
    SparseMatrix sum = net.layer(0);
    for (Index t = 1; t < net.layer_count(); ++t) {
        sum += net.layer(t);
    }
    sum.prune(0.0);
    return sum;
}

ValidationReport validate(const TemporalNetwork &net) {
    ValidationReport report;
    const Index n = net.node_count();
    for (Index t = 0; t < net.layer_count(); ++t) {
        const SparseMatrix &a = net.layer(t);
        Index edges = 0;
        Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
        for (Index k = 0; k < a.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
                if (it.value() != 0.0) {
                    ++edges;
                    out[it.row()] += it.value();
                    if (it.row() == it.col()) {
                        ++report.self_loop_count;
                    }
                }
            }
        }
        report.edges_per_layer.push_back(edges);
        report.zero_out_degree_per_layer.push_back((out.array() == 0.0).count());
    }
    report.aggregate_strongly_connected = strongly_connected(aggregate(net));
    return report;
}

} // namespace supra
