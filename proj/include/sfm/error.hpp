#pragma once

#include <stdexcept>
#include <string>

namespace sfm {

// Shape/contract violations on tensor operations.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf escaping an operation, divergence, solver underflow.
struct NumericFault : std::runtime_error {
    explicit NumericFault(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user-facing configuration: unknown keys, invalid ranges, missing inputs.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sfm
