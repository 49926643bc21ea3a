#pragma once

#include <stdexcept>
#include <string>

namespace fracnehari {

// Invalid or inconsistent problem configuration (CLI exit code 3).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fiber root bracketing failed inside [1e-12, 1e12]; usually indicates a
// hypothesis-violating nonlinearity or numerical overflow along the ray.
struct ProjectionError : std::runtime_error {
    explicit ProjectionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Descent could not decrease the energy for 50 consecutive line searches.
struct StagnationError : std::runtime_error {
    explicit StagnationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Every restart of the ground-state search failed.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures when emitting results (CLI exit code 4).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fracnehari
