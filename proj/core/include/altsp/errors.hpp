#ifndef ALTSP_ERRORS_HPP
#define ALTSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace altsp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument or parameter is outside its mathematical domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A configuration document, preset, or CLI invocation is invalid.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// A numerical routine failed (quadrature non-convergence, negative
/// variance beyond tolerance, allocation overflow, ...).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// The Fisher matrix is singular or too ill-conditioned to invert.
class SingularMatrixError : public NumericalError {
public:
    explicit SingularMatrixError(const std::string& what) : NumericalError(what) {}
};

/// The plan optimizer exhausted all restarts without a feasible point.
class InfeasibleError : public NumericalError {
public:
    InfeasibleError(const std::string& what, double best_residual)
        : NumericalError(what), best_residual_(best_residual) {}
    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

/// Every optimizer start diverged to a non-finite objective.
class NonConvergenceError : public NumericalError {
public:
    explicit NonConvergenceError(const std::string& what) : NumericalError(what) {}
};

}  // namespace altsp

#endif  // ALTSP_ERRORS_HPP
