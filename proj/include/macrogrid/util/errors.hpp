#pragma once

#include <stdexcept>
#include <string>

namespace macrogrid {

/// Invalid scenario/config/usage input. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Solver non-convergence, divergence, ill-conditioning. CLI exit code 1.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace macrogrid
