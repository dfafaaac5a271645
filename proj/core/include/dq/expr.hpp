#pragma once

#include "dq/phase_poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dq {

/// Parses a polynomial expression.
///
/// Grammar (whitespace is ignored between tokens):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' integer)?
///     primary := number | identifier | '(' expr ')'
///
/// Identifiers are `q p a abar hbar i`. Multiplication must be explicit.
/// The exponent after `^` is a non-negative integer literal. The right
/// operand of `/` must reduce to a non-zero numeric constant, which is what
/// lets printed rational coefficients such as `(i/2)` parse back.
///
/// Throws ParseError (with byte offset) on malformed input, unknown
/// identifiers, negative exponents, and variables foreign to `basis`.
PhasePoly parse_expr(std::string_view text, Basis basis);

/// As parse_expr, with the basis inferred from the variables used
/// (canonical when none appear). Mixing q/p with a/abar is a ParseError.
PhasePoly parse_expr(std::string_view text);

/// Canonical text form: terms by descending total degree, then
/// lexicographically (higher power of q or a first), then by hbar power.
/// Rational coefficients are recognised and printed exactly.
std::string to_string(const PhasePoly& f);

/// Formats a complex coefficient the way the pretty-printer does
/// (e.g. "1/2", "i/2", "(1 + 2*i)"). Exposed for serializers.
std::string format_coefficient(cplx c);

}  // namespace dq
