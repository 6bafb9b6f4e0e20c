#pragma once

#include "janossy/potential.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace janossy::cli {

class PolyParseError : public std::runtime_error {
public:
    PolyParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Polynomial in x with +, -, *, / (by constants), ^ (nonnegative integer
// powers), parentheses and implicit products such as "2x^2" or "3(x+1)".
// Returns ascending coefficients with trailing zeros removed.
std::vector<double> parse_polynomial(const std::string& text);

// parse_polynomial wrapped in a Potential (even degree, positive leading term).
Potential parse_potential(const std::string& text);

} // namespace janossy::cli
