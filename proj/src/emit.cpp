#include "supra/emit.hpp"

#include <stdexcept>

#include "supra/format.hpp"

namespace supra {

namespace {

std::vector<Index> all_nodes(Index n) {
    std::vector<Index> ids(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        ids[static_cast<std::size_t>(i)] = i;
    }
    return ids;
}

const Matrix &matrix_for(OutputKind kind, const CentralityResult &r) {
    switch (kind) {
    case OutputKind::Joint:
        return r.joint;
    case OutputKind::CondNode:
        return r.cond_node;
    case OutputKind::CondLayer:
        return r.cond_layer;
    default:
        throw std::logic_error("not a matrix output");
    }
}

} // namespace

const char *output_kind_name(OutputKind kind) {
    switch (kind) {
    case OutputKind::Joint:
        return "joint";
    case OutputKind::Mlc:
        return "mlc";
    case OutputKind::Mnc:
        return "mnc";
    case OutputKind::CondNode:
        return "cond_node";
    case OutputKind::CondLayer:
        return "cond_layer";
    case OutputKind::Eigenvalue:
        return "eigenvalue";
    }
    return "?";
}

std::string emit_csv(OutputKind kind, const CentralityResult &result,
                     const std::vector<std::string> &node_labels,
                     const std::vector<LayerKey> &layer_keys,
                     const std::vector<Index> &node_subset) {
    const auto nodes = node_subset.empty() ? all_nodes(result.joint.rows()) : node_subset;
    std::string out;
    switch (kind) {
    case OutputKind::Joint:
    case OutputKind::CondNode:
    case OutputKind::CondLayer: {
        const Matrix &m = matrix_for(kind, result);
        out = "node,layer,value\n";
        for (Index t = 0; t < m.cols(); ++t) {
            for (Index i : nodes) {
                out += node_labels[static_cast<std::size_t>(i)];
                out += ',';
                out += std::to_string(layer_keys[static_cast<std::size_t>(t)]);
                out += ',';
                out += format_double17(m(i, t));
                out += '\n';
            }
        }
        break;
    }
    case OutputKind::Mlc:
        out = "layer,value\n";
        for (Index t = 0; t < result.mlc.size(); ++t) {
            out += std::to_string(layer_keys[static_cast<std::size_t>(t)]);
            out += ',';
            out += format_double17(result.mlc[t]);
            out += '\n';
        }
        break;
    case OutputKind::Mnc:
        out = "node,value\n";
        for (Index i : nodes) {
            out += node_labels[static_cast<std::size_t>(i)];
            out += ',';
            out += format_double17(result.mnc[i]);
            out += '\n';
        }
        break;
    case OutputKind::Eigenvalue:
        out = "lambda_max,iterations,residual\n";
        out += format_double17(result.lambda_max);
        out += ',';
        out += std::to_string(result.iterations);
        out += ',';
        out += format_double17(result.residual);
        out += '\n';
        break;
    }
    return out;
}

nlohmann::json emit_json(OutputKind kind, const CentralityResult &result,
                         const std::vector<std::string> &node_labels,
                         const std::vector<LayerKey> &layer_keys,
                         const std::vector<Index> &node_subset) {
    const auto nodes = node_subset.empty() ? all_nodes(result.joint.rows()) : node_subset;
    nlohmann::json j;
    auto node_names = [&] {
        nlohmann::json arr = nlohmann::json::array();
        for (Index i : nodes) {
            arr.push_back(node_labels[static_cast<std::size_t>(i)]);
        }
        return arr;
    };
    auto layer_names = [&] {
        nlohmann::json arr = nlohmann::json::array();
        for (LayerKey k : layer_keys) {
            arr.push_back(k);
        }
        return arr;
    };
    switch (kind) {
    case OutputKind::Joint:
    case OutputKind::CondNode:
    case OutputKind::CondLayer: {
        const Matrix &m = matrix_for(kind, result);
        j["nodes"] = node_names();
        j["layers"] = layer_names();
        nlohmann::json rows = nlohmann::json::array();
        for (Index i : nodes) {
            nlohmann::json row = nlohmann::json::array();
            for (Index t = 0; t < m.cols(); ++t) {
                row.push_back(m(i, t));
            }
            rows.push_back(std::move(row));
        }
        j[output_kind_name(kind)] = std::move(rows);
        break;
    }
    case OutputKind::Mlc: {
        j["layers"] = layer_names();
        nlohmann::json vals = nlohmann::json::array();
        for (Index t = 0; t < result.mlc.size(); ++t) {
            vals.push_back(result.mlc[t]);
        }
        j["mlc"] = std::move(vals);
        break;
    }
    case OutputKind::Mnc: {
        j["nodes"] = node_names();
        nlohmann::json vals = nlohmann::json::array();
        for (Index i : nodes) {
            vals.push_back(result.mnc[i]);
        }
        j["mnc"] = std::move(vals);
        break;
    }
    case OutputKind::Eigenvalue:
        j["lambda_max"] = result.lambda_max;
        j["iterations"] = result.iterations;
        j["residual"] = result.residual;
        break;
    }
    return j;
}

} // namespace supra
