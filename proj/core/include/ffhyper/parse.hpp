#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ffhyper/multipoly.hpp"

namespace ffhyper {

/// Parses polynomial text over `field`.
///
/// Grammar (whitespace and newlines ignored between tokens):
///
///     expr    := term (('+' | '-') term)*
///     term    := factor ('*' factor)*
///     factor  := '-' factor | power
///     power   := primary ('^' integer)?
///     primary := integer | 'x' index | 'g' | '(' expr ')'
///
/// Integer literals are reduced mod p. `g` is the field generator (the class
/// of t in F_p[t]/(modulus)); it lets extension-field coefficients round-trip
/// through text. Variables are x1, x2, ...; the arity is `nvars` when given
/// (a larger index is an error), otherwise the largest index used (at least 1).
///
/// Throws ParseError carrying the 1-based line and column of the failure.
MultiPoly parse_poly(const FieldPtr& field, std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// Canonical text: terms in descending graded-lex order, coefficients as
/// residues in [0, p), extension coefficients with several terms parenthesised, e.g.
/// "2*x1^2*x2+x3+(1+g)".
std::string format_poly(const MultiPoly& f);

}  // namespace ffhyper
