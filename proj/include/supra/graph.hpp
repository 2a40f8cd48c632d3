#ifndef SUPRA_GRAPH_HPP_
#define SUPRA_GRAPH_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <vector>

namespace supra {

using Index = Eigen::Index;

// Directed graph given as out-neighbour lists; used for the strong-connectivity
// checks behind the Perron-Frobenius preconditions.
using AdjacencyLists = std::vector<std::vector<Index>>;

AdjacencyLists adjacency_of(const Eigen::SparseMatrix<double> &m);
AdjacencyLists adjacency_of(const Eigen::MatrixXd &m);

// True iff every node reaches every other node along directed edges.
// A graph with a single node is strongly connected; an empty one is not.
bool strongly_connected(const AdjacencyLists &adj);
bool strongly_connected(const Eigen::SparseMatrix<double> &m);
bool strongly_connected(const Eigen::MatrixXd &m);

} // namespace supra

#endif // SUPRA_GRAPH_HPP_
