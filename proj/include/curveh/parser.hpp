#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "curveh/polynomial.hpp"

namespace curveh {

/// Base class for every rejection of polynomial text.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t position, const std::string& message)
        : InputError("parse error at column " + std::to_string(position + 1) + ": " + message), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class NonHomogeneousError : public InputError {
public:
    using InputError::InputError;
};

class ZeroPolynomialError : public InputError {
public:
    using InputError::InputError;
};

/// Parses and expands an expression over x, y, z with rational literals,
/// + - * ^, parentheses and implicit multiplication ("2xy^2z"). Exponents
/// may be braced as in "x^{5}".
Poly parse_poly(std::string_view text);

}  // namespace curveh
