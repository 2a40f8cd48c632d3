#ifndef SUPRA_EMIT_HPP_
#define SUPRA_EMIT_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "supra/supra_operator.hpp"

namespace supra {

enum class OutputKind { Joint, Mlc, Mnc, CondNode, CondLayer, Eigenvalue };

const char *output_kind_name(OutputKind kind);

// Round-trip-safe decimal rendering of a 64-bit float (17 significant digits).
std::string format_double17(double v);

// One table per call. Matrix-valued outputs are keyed (node,layer) with layers
// ascending and nodes in registry order; mlc is keyed by layer, mnc by node.
// `node_subset` (registry indices) restricts node-keyed rows; empty = all.
std::string emit_csv(OutputKind kind, const CentralityResult &result,
                     const std::vector<std::string> &node_labels,
                     const std::vector<LayerKey> &layer_keys,
                     const std::vector<Index> &node_subset = {});

nlohmann::json emit_json(OutputKind kind, const CentralityResult &result,
                         const std::vector<std::string> &node_labels,
                         const std::vector<LayerKey> &layer_keys,
                         const std::vector<Index> &node_subset = {});

} // namespace supra

#endif // SUPRA_EMIT_HPP_
