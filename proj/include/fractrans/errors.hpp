#pragma once

#include <stdexcept>
#include <string>

namespace fractrans {

// Input outside a formula's admissible range (s, alpha, r, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Mesh / lifting / coefficient combinations that do not fit together.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested mesh exceeds the dense-matrix capacity cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// |sigma2|/sigma1 == (1-b)/b: the local operator has kernel span{phi}.
class CriticalContrastError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Interface equation denominator c* numerically degenerate.
class SolvabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// LU pivot below threshold.
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature did not reach the requested tolerance within its budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_rel)
        : std::runtime_error(what), achieved(achieved_rel) {}
    double achieved;
};

} // namespace fractrans
