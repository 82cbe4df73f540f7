#pragma once

#include <stdexcept>
#include <string>

namespace symdecomp {

// Thrown when the floating-point pipeline produces results outside its
// guaranteed tolerances (non-integer spectrum, residual breach, ...).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when input matrices fail the generator relation checks.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Default residual tolerance, overridable via the SYMDECOMP_TOL env var.
double default_tolerance();

}  // namespace symdecomp
