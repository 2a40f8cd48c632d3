#include "supra/edge_list.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "supra/errors.hpp"
#include "supra/format.hpp"

namespace supra {

namespace {

std::vector<std::string> split(const std::string &line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, delimiter)) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == delimiter) {
        fields.emplace_back();
    }
    return fields;
}

std::string strip(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

LayerKey parse_layer_key(const std::string &field, std::size_t line) {
    try {
        std::size_t consumed = 0;
        LayerKey key = std::stoll(field, &consumed);
        if (consumed != field.size()) {
            throw std::invalid_argument(field);
        }
        return key;
    } catch (const std::exception &) {
        throw ParseError("layer key is not an integer: '" + field + "'", line);
    }
}

double parse_weight(const std::string &field, std::size_t line) {
    double w = 0.0;
    try {
        std::size_t consumed = 0;
        w = std::stod(field, &consumed);
        if (consumed != field.size()) {
            throw std::invalid_argument(field);
        }
    } catch (const std::exception &) {
        throw ParseError("weight is not a number: '" + field + "'", line);
    }
    if (!std::isfinite(w)) {
        throw std::domain_error("line " + std::to_string(line) + ": weight must be finite");
    }
    if (w < 0.0) {
        throw std::domain_error("line " + std::to_string(line) + ": negative edge weight " +
                                field);
    }
    return w;
}

} // namespace

TemporalNetwork load_edge_list(std::istream &in, const EdgeListOptions &options) {
    NodeRegistry registry;
    // (layer key) -> (src,dst) -> weight; std::map keeps keys sorted.
    std::map<LayerKey, std::map<std::pair<Index, Index>, double>> acc;

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    bool any_row = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = strip(line);
        if (text.empty() || text[0] == '#') {
            continue;
        }
        auto fields = split(text, options.delimiter);
        for (auto &f : fields) {
            f = strip(f);
        }
        if (!header_seen) {
            if (fields.size() < 3 || fields[0] != "layer" || fields[1] != "src" ||
                fields[2] != "dst" || (fields.size() == 4 && fields[3] != "weight") ||
                fields.size() > 4) {
                throw ParseError("expected header 'layer,src,dst[,weight]'", line_no);
            }
            header_seen = true;
            continue;
        }
        if (fields.size() < 3 || fields.size() > 4) {
            throw ParseError("expected 3 or 4 fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        if (fields[1].empty() || fields[2].empty()) {
            throw ParseError("empty node label", line_no);
        }
        const LayerKey key = parse_layer_key(fields[0], line_no);
        const Index src = registry.add(fields[1]);
        const Index dst = registry.add(fields[2]);
        const double w = fields.size() == 4 ? parse_weight(fields[3], line_no) : 1.0;

        auto [it, inserted] = acc[key].try_emplace({src, dst}, w);
        if (!inserted) {
            if (options.duplicates == EdgeListOptions::Duplicates::Error) {
                throw ParseError("duplicate edge (" + fields[1] + " -> " + fields[2] +
                                     ") in layer " + fields[0],
                                 line_no);
            }
            it->second += w;
        }
        any_row = true;
    }
    if (!any_row) {
        throw std::domain_error("edge list contains no data rows");
    }

    std::vector<LayerKey> keys;
    for (const auto &[key, edges] : acc) {
        keys.push_back(key);
    }
    if (options.fill_missing_layers) {
        for (LayerKey k = keys.front(); k <= keys.back(); ++k) {
            acc.try_emplace(k); // no-op when present
        }
        keys.clear();
        for (const auto &[key, edges] : acc) {
            keys.push_back(key);
        }
    }

    const Index n = registry.size();
    std::vector<SparseMatrix> layers;
    layers.reserve(keys.size());
    for (LayerKey key : keys) {
        std::vector<Eigen::Triplet<double>> triplets;
        for (const auto &[edge, w] : acc[key]) {
            triplets.emplace_back(edge.first, edge.second, w);
        }
        SparseMatrix a(n, n);
        a.setFromTriplets(triplets.begin(), triplets.end());
        layers.push_back(std::move(a));
    }
    return TemporalNetwork(std::move(registry), std::move(layers), std::move(keys));
}

void write_edge_list(const TemporalNetwork &net, std::ostream &out) {
    out << "layer,src,dst,weight\n";
    for (Index t = 0; t < net.layer_count(); ++t) {
        const SparseMatrix &a = net.layer(t);
        // deterministic row-major order independent of internal storage
        std::vector<Eigen::Triplet<double>> entries;
        for (Index k = 0; k < a.outerSize(); ++k) {
            for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
                if (it.value() != 0.0) {
                    entries.emplace_back(it.row(), it.col(), it.value());
                }
            }
        }
        std::sort(entries.begin(), entries.end(), [](const auto &x, const auto &y) {
            return std::pair(x.row(), x.col()) < std::pair(y.row(), y.col());
        });
        for (const auto &e : entries) {
            out << net.layer_keys()[static_cast<std::size_t>(t)] << ','
                << net.registry().label(e.row()) << ',' << net.registry().label(e.col()) << ','
                << format_double17(e.value()) << '\n';
        }
    }
}

} // namespace supra
