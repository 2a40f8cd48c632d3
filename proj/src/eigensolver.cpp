#include "supra/eigensolver.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace supra {

EigenPair power_iteration(Index n, const ApplyFn &apply, const PowerOptions &options) {
    if (n < 1) {
        throw std::invalid_argument("power iteration needs dimension >= 1");
    }
    Eigen::VectorXd v;
    if (options.start.size() == n) {
        v = options.start.cwiseAbs();
        const double norm = v.lpNorm<1>();
        if (norm > 0.0) {
            v /= norm;
        } else {
            v.setConstant(1.0 / static_cast<double>(n));
        }
    } else {
        v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    }

    Eigen::VectorXd mv(n);
    EigenPair out;
    for (long k = 1; k <= options.max_iter; ++k) {
        apply(v, mv);
        // 1-norm Rayleigh quotient: v is positive with unit 1-norm.
        const double lambda = mv.sum();
        const double residual = (mv - lambda * v).lpNorm<1>();
        out.value = lambda;
        out.vector = v;
        out.iterations = k;
        out.residual = residual;
        if (residual <= options.tol * std::max(1.0, std::abs(lambda))) {
            out.converged = true;
            return out;
        }
        mv += options.shift * v;
        const double norm = mv.lpNorm<1>();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            out.converged = false; // operator annihilated the iterate
            return out;
        }
        v = mv / norm;
    }
    out.converged = false;
    return out;
}

DenseEigenResult dominant_eigen_dense(const Eigen::MatrixXd &m, double tie_tol) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("dense eigensolver needs a square matrix");
    }
    DenseEigenResult result;
    const Index n = m.rows();
    if (n == 1) {
        result.pair.value = m(0, 0);
        result.pair.vector = Eigen::VectorXd::Ones(1);
        result.pair.converged = true;
        return result;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("dense eigendecomposition failed");
    }
    const auto &values = es.eigenvalues();

    // Perron root of a nonnegative matrix = eigenvalue of largest real part.
    Index top = 0;
    for (Index i = 1; i < n; ++i) {
        if (values[i].real() > values[top].real()) {
            top = i;
        }
    }
    const std::complex<double> lambda = values[top];
    const double scale = std::max(1.0, std::abs(lambda));
    for (Index i = 0; i < n; ++i) {
        if (i != top && std::abs(values[i] - lambda) <= tie_tol * scale) {
            result.simple = false;
        }
    }
    if (std::abs(lambda.imag()) > tie_tol * scale) {
        result.simple = false; // dominant eigenvalue is not real
    }

    Eigen::VectorXcd vc = es.eigenvectors().col(top);
    Index big = 0;
    for (Index i = 1; i < n; ++i) {
        if (std::abs(vc[i]) > std::abs(vc[big])) {
            big = i;
        }
    }
    if (std::abs(vc[big]) > 0.0) {
        vc /= vc[big] / std::abs(vc[big]); // rotate the phase out
    }
    Eigen::VectorXd v = vc.real();
    const double norm = v.lpNorm<1>();
    if (norm > 0.0) {
        v /= norm;
    }
    if (v.sum() < 0.0) {
        v = -v;
    }

    result.pair.value = lambda.real();
    result.pair.vector = v;
    result.pair.converged = true;
    result.pair.residual = (m * v - lambda.real() * v).lpNorm<1>();
    return result;
}

} // namespace supra
