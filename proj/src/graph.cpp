#include "supra/graph.hpp"

namespace supra {

AdjacencyLists adjacency_of(const Eigen::SparseMatrix<double> &m) {
    AdjacencyLists adj(static_cast<std::size_t>(m.rows()));
    for (Index k = 0; k < m.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
            if (it.value() != 0.0) {
                adj[static_cast<std::size_t>(it.row())].push_back(it.col());
            }
        }
    }
    return adj;
}

AdjacencyLists adjacency_of(const Eigen::MatrixXd &m) {
    AdjacencyLists adj(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0.0) {
                adj[static_cast<std::size_t>(i)].push_back(j);
            }
        }
    }
    return adj;
}

namespace {

// Iterative DFS marking everything reachable from node 0.
std::vector<char> reachable_from_zero(const AdjacencyLists &adj) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<Index> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const Index u = stack.back();
        stack.pop_back();
        for (Index v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

AdjacencyLists transpose_of(const AdjacencyLists &adj) {
    AdjacencyLists rev(adj.size());
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (Index v : adj[u]) {
            rev[static_cast<std::size_t>(v)].push_back(static_cast<Index>(u));
        }
    }
    return rev;
}

} // namespace

bool strongly_connected(const AdjacencyLists &adj) {
    if (adj.empty()) {
        return false;
    }
    if (adj.size() == 1) {
        return true;
    }
    for (char s : reachable_from_zero(adj)) {
        if (!s) {
            return false;
        }
    }
    for (char s : reachable_from_zero(transpose_of(adj))) {
        if (!s) {
            return false;
        }
    }
    return true;
}

bool strongly_connected(const Eigen::SparseMatrix<double> &m) {
    return strongly_connected(adjacency_of(m));
}

bool strongly_connected(const Eigen::MatrixXd &m) {
    return strongly_connected(adjacency_of(m));
}

} // namespace supra
