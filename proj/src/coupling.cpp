#include "supra/coupling.hpp"

#include <cmath>
#include <istream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "supra/errors.hpp"

namespace supra {

InterlayerCoupling undirected_chain(Index t_count) {
    if (t_count < 1) {
        throw std::domain_error("coupling needs at least one layer");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t_count, t_count);
    for (Index t = 0; t + 1 < t_count; ++t) {
        m(t, t + 1) = 1.0;
        m(t + 1, t) = 1.0;
    }
    return {std::move(m), CouplingTopology::UndirectedChain, 0.0};
}

InterlayerCoupling directed_chain_teleport(Index t_count, double gamma) {
    if (t_count < 1) {
        throw std::domain_error("coupling needs at least one layer");
    }
    if (!(gamma > 0.0)) {
        throw std::domain_error("layer-teleportation rate gamma must be positive");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(t_count, t_count, gamma);
    for (Index t = 0; t + 1 < t_count; ++t) {
        m(t, t + 1) = 1.0 + gamma;
    }
    return {std::move(m), CouplingTopology::DirectedChainTeleport, gamma};
}

InterlayerCoupling reverse(const InterlayerCoupling &c) {
    CouplingTopology topology = c.topology;
    if (topology == CouplingTopology::DirectedChainTeleport) {
        topology = CouplingTopology::ReversedDirectedChainTeleport;
    } else if (topology == CouplingTopology::ReversedDirectedChainTeleport) {
        topology = CouplingTopology::DirectedChainTeleport;
    }
    return {c.matrix.transpose(), topology, c.gamma};
}

InterlayerCoupling load_custom(Eigen::MatrixXd matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1) {
        throw std::domain_error("interlayer coupling matrix must be square and nonempty");
    }
    for (Index i = 0; i < matrix.rows(); ++i) {
        for (Index j = 0; j < matrix.cols(); ++j) {
            if (!(matrix(i, j) >= 0.0) || !std::isfinite(matrix(i, j))) {
                throw std::domain_error("interlayer coupling entries must be finite and >= 0");
            }
        }
    }
    return {std::move(matrix), CouplingTopology::Custom, 0.0};
}

InterlayerCoupling coupling_from_csv(std::istream &in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<double> row;
        std::istringstream is(line);
        std::string field;
        while (std::getline(is, field, ',')) {
            try {
                std::size_t consumed = 0;
                row.push_back(std::stod(field, &consumed));
                if (consumed != field.size()) {
                    throw std::invalid_argument(field);
                }
            } catch (const std::exception &) {
                throw ParseError("bad coupling entry '" + field + "'", line_no);
            }
        }
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw std::domain_error("coupling CSV is empty");
    }
    const Index t = static_cast<Index>(rows.size());
    Eigen::MatrixXd m(t, t);
    for (Index i = 0; i < t; ++i) {
        if (static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) != t) {
            throw ParseError("coupling CSV is not square", static_cast<std::size_t>(i) + 1);
        }
        for (Index j = 0; j < t; ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return load_custom(std::move(m));
}

InterlayerCoupling coupling_from_json(std::istream &in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("coupling JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) {
        throw ParseError("coupling JSON must be a nonempty array of rows");
    }
    const Index t = static_cast<Index>(j.size());
    Eigen::MatrixXd m(t, t);
    for (Index i = 0; i < t; ++i) {
        const auto &row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != t) {
            throw ParseError("coupling JSON is not a square matrix");
        }
        for (Index jj = 0; jj < t; ++jj) {
            const auto &cell = row[static_cast<std::size_t>(jj)];
            if (!cell.is_number()) {
                throw ParseError("coupling JSON entries must be numbers");
            }
            m(i, jj) = cell.get<double>();
        }
    }
    return load_custom(std::move(m));
}

bool is_strongly_connected(const InterlayerCoupling &c) {
    return strongly_connected(c.matrix);
}

} // namespace supra
