#pragma once

#include <stdexcept>
#include <string>

namespace akinv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input: mismatched characteristics, reserved variable names,
/// non-prime moduli, malformed presentations, and the like.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A configured resource cap was exceeded (Groebner reduction steps,
/// search bounds). Signals "input too hard for the configured limits",
/// never a wrong answer.
struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(what) {}
};

/// Division by zero or an inverse of a non-unit.
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& what) : Error(what) {}
};

}  // namespace akinv
