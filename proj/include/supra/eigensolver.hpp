#ifndef SUPRA_EIGENSOLVER_HPP_
#define SUPRA_EIGENSOLVER_HPP_

#include <Eigen/Dense>
#include <functional>

#include "supra/graph.hpp"

namespace supra {

struct PowerOptions {
    double tol = 1e-12;         // convergence: ||M v - lambda v||_1 <= tol * max(1, |lambda|)
    long max_iter = 1'000'000;
    double shift = 1.0;         // power-iterates M + shift*I; shift breaks periodicity
    Eigen::VectorXd start;      // warm start; empty = uniform positive vector
};

struct EigenPair {
    double value = 0.0;
    Eigen::VectorXd vector; // 1-norm normalized, positively oriented
    long iterations = 0;
    double residual = 0.0; // absolute ||M v - lambda v||_1 at exit
    bool converged = false;
};

using ApplyFn = std::function<void(const Eigen::VectorXd &, Eigen::VectorXd &)>;

// Shifted power iteration for the dominant (Perron) eigenpair of a nonnegative
// operator given by its action y = M x. Deterministic: uniform start vector
// unless one is supplied, fixed accumulation order. Does not throw on
// non-convergence; inspect `converged`.
EigenPair power_iteration(Index n, const ApplyFn &apply, const PowerOptions &options = {});

// Dense route: full eigendecomposition, dominant = eigenvalue of largest real
// part (the Perron root for nonnegative input). `simple` is false when another
// eigenvalue coincides with it within `tie_tol` relative distance.
struct DenseEigenResult {
    EigenPair pair;
    bool simple = true;
};
DenseEigenResult dominant_eigen_dense(const Eigen::MatrixXd &m, double tie_tol = 1e-9);

} // namespace supra

#endif // SUPRA_EIGENSOLVER_HPP_
