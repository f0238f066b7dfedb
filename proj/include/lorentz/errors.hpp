#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

/// A matrix failed a structural pattern check (Lie-algebra layout, metric
/// preservation, determinant).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid scenario or incompatible stepper/field-map combination.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scenario text could not be parsed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The integrator left its validity envelope (mass-shell blow-up, bad field
/// evaluation).
class IntegratorError : public std::runtime_error {
public:
    explicit IntegratorError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lorentz
