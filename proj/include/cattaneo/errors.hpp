#pragma once

#include <stdexcept>
#include <string>

namespace cattaneo {

// Inconsistent parameters for the requested operation (bad tau for a variant,
// missing coefficient callbacks, wrong scheme for an op, ...).
struct ConfigurationError : std::runtime_error {
    explicit ConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

// A time step drove rho or theta nonpositive. Carries the offending node.
struct PositivityError : std::runtime_error {
    PositivityError(const std::string& what, int node_, double value_)
        : std::runtime_error(what), node(node_), value(value_) {}
    int node;
    double value;
};

// Linear-algebra breakdown (vanishing tridiagonal pivot, singular A0, ...).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cattaneo
