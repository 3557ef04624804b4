#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "invmaps/polynomial.hpp"

namespace invmaps {

/// Renders g in graded-lex order, e.g. "x1^7 + 7 x1^5 x2 + 1/2 x3".
/// Coefficients of 1 and exponents of 1 are implicit; "0" for the zero
/// polynomial. Negative coefficients are written with a binary minus.
std::string format_polynomial(const Polynomial& g, std::string_view var = "x");

/// Renders a single monomial ("x1^2 x3"); "1" for the empty monomial.
std::string format_monomial(const MultiIndex& alpha, std::string_view var = "x");

/// Parses the text grammar
///
///   polynomial := ['-'] term (('+' | '-') term)*
///   term       := [coeff] factor*
///   coeff      := integer | integer '/' integer
///   factor     := 'x' index ['^' exponent]
///
/// Whitespace is insignificant. When num_vars is omitted the variable count is
/// the largest index seen. Throws ParseError with a character offset.
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> num_vars = {});

/// Parses a bare monomial such as "x1^2 x2" (no coefficient allowed).
MultiIndex parse_monomial(std::string_view text, std::size_t num_vars);

/// Parses text or JSON: input whose first non-blank character is '{' is read
/// with the JSON schema, anything else with the text grammar.
Polynomial parse_polynomial_any(std::string_view text, std::optional<std::size_t> num_vars = {});

}  // namespace invmaps
