#ifndef SUPRA_ERRORS_HPP_
#define SUPRA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supra {

// Malformed input data (bad CSV row, bad JSON shape). Carries the 1-based
// line number when known (0 = not applicable).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// An input violates a Perron-Frobenius precondition (reducible coupling,
// degenerate dominant eigenvalue, omega = 0, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The iterative solver exhausted max_iter before reaching the residual target.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string &what, long iterations, double residual)
        : std::runtime_error(what), iterations_(iterations), residual_(residual) {}

    long iterations() const { return iterations_; }
    double residual() const { return residual_; }

private:
    long iterations_;
    double residual_;
};

} // namespace supra

#endif // SUPRA_ERRORS_HPP_
