#ifndef SUPRA_EDGE_LIST_HPP_
#define SUPRA_EDGE_LIST_HPP_

#include <iosfwd>

#include "supra/temporal_network.hpp"

namespace supra {

struct EdgeListOptions {
    char delimiter = ',';
    // What to do with repeated (layer,src,dst) rows.
    enum class Duplicates { Sum, Error } duplicates = Duplicates::Sum;
    // Insert empty layers for integer keys missing between min and max.
    bool fill_missing_layers = false;
};

// Reads `layer,src,dst,weight` CSV (header required, weight column optional,
// '#' lines ignored). The node set is the union of labels over all layers;
// layers are sorted by key. Throws ParseError / std::domain_error.
TemporalNetwork load_edge_list(std::istream &in, const EdgeListOptions &options = {});

// Inverse of load_edge_list up to row order: one row per stored nonzero,
// layers ascending, full 17-significant-digit weights.
void write_edge_list(const TemporalNetwork &net, std::ostream &out);

} // namespace supra

#endif // SUPRA_EDGE_LIST_HPP_
