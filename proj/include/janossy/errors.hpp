#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace janossy {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Matrix or operator too close to singular for the requested quantity.
class ConditioningError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> best)
        : Error(what), best_iterate(std::move(best)) {}
    std::vector<double> best_iterate;
};

class StiffnessError : public Error {
public:
    using Error::Error;
};

class UnsupportedPotential : public Error {
public:
    using Error::Error;
};

class ConstraintInfeasible : public Error {
public:
    using Error::Error;
};

class ResolutionInsufficient : public Error {
public:
    using Error::Error;
};

// Two independent routes to the same quantity disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace janossy
