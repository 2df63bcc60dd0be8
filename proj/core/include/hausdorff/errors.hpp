#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hausdorff {

/// Result of the L2-boundedness test: the integral of |K(u)|/|a(u)|^(1/2)
/// over the punctured line, which is also an upper bound for the operator norm.
struct BoundednessReport {
    double integral_value = 0.0;  // +inf when divergent
    bool admissible = false;
    double quadrature_error_estimate = 0.0;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kernel failed the integrability condition; carries the evidence.
class NotAdmissibleError : public Error {
public:
    NotAdmissibleError(std::string msg, BoundednessReport rep)
        : Error(std::move(msg)), report(rep) {}
    BoundednessReport report;
};

/// Mass that should be representable fell outside the sampled window.
class GridTooSmallError : public Error {
public:
    GridTooSmallError(std::string msg, double mass, std::string end)
        : Error(std::move(msg)), lost_mass(mass), offending_end(std::move(end)) {}
    double lost_mass = 0.0;
    std::string offending_end;  // "left", "right" or "both"
};

class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// Operands live in different algebras (different scaling functions a).
class IncompatibleAlgebraError : public Error {
public:
    using Error::Error;
};

class ContourError : public Error {
public:
    using Error::Error;
};

/// A stated contract was violated (e.g. F(0) != 0 in the functional calculus).
class ContractViolationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(std::string msg, int line = 0) : Error(std::move(msg)), line_number(line) {}
    int line_number = 0;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

}  // namespace hausdorff
