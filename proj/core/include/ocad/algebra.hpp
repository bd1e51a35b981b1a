#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ocad/polynomial.hpp"

namespace ocad {

/// Primitive integer-coefficient associate with a positive leading
/// coefficient (lexicographic order, first declared variable most
/// significant). Zero maps to zero.
Polynomial canonical(const Polynomial& p);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Polynomial> tryDivide(const Polynomial& p, const Polynomial& q);
/// Exact quotient; a nonzero remainder throws InternalError.
Polynomial divideExact(const Polynomial& p, const Polynomial& q);

/// gcd of the coefficients of p viewed as univariate in v (canonical form).
Polynomial contentIn(const Polynomial& p, Var v);

/// Canonical greatest common divisor; gcd(p, 0) = canonical(p).
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Determinant of the Sylvester matrix of p and q with respect to v.
/// Requires degree >= 1 in v for both.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v);

/// (-1)^(d(d-1)/2) * resultant(p, dp/dv, v) / leadCoeff(p, v), d = degreeIn(p, v) >= 2.
Polynomial discriminant(const Polynomial& p, Var v);

/// p divided by gcd(p, all partial derivatives), in canonical form.
Polynomial squarefreePart(const Polynomial& p);

/// Canonical, sorted list of nonconstant, squarefree, pairwise coprime
/// polynomials whose product vanishes exactly where the product of the
/// nonconstant inputs does. Rational linear factors of univariate members are
/// split off.
std::vector<Polynomial> factorsInList(std::span<const Polynomial> polys);

}  // namespace ocad
