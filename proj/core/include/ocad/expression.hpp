#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocad/polynomial.hpp"

namespace ocad {

/// Parses a polynomial expression over `universe`.
///
///   expr     := term (('+' | '-') term)*
///   term     := unary ('*' unary)*
///   unary    := '-'? factor
///   factor   := base ('^' natural)?
///   base     := rational | identifier | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// There is no implicit multiplication ("7x" is rejected) and unary minus
/// binds looser than '^', so -x^2 = -(x^2). Throws ParseError (with the
/// offending position) or InvalidArgument for unknown identifiers.
Polynomial parsePolynomial(std::string_view text, const UniversePtr& universe);

/// Identifiers in order of first appearance; used to infer a universe when
/// none is declared.
std::vector<std::string> identifiersIn(std::string_view text);

/// Canonical text form accepted by parsePolynomial: terms by descending total
/// degree, then lexicographically, e.g. "x1^2 + x2^2 - 1", "-x2^2 - 27/64",
/// "3/4*x*y^2".
std::string render(const Polynomial& p);

}  // namespace ocad
