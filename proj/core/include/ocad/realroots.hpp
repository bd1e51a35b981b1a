#pragma once

#include <span>
#include <vector>

#include "ocad/dense.hpp"
#include "ocad/polynomial.hpp"

namespace ocad {

using dense::Interval;

/// Bound B with every real root of the univariate polynomial p in [-B, B]:
/// the smaller of the Cauchy bound 1 + max|a_i|/|a_d| and the Fujiwara-style
/// bound 2 * max (|a_{d-i}|/|a_d|)^(1/i), the latter rounded up to a power of
/// two. Absolute values throughout, so a negative leading coefficient is fine.
Rational rootBound(const Polynomial& p);

/// Sturm sequence of the squarefree part of p: p0, p0', then the negated
/// remainders over the rationals until a constant.
std::vector<Polynomial> sturmSequence(const Polynomial& p);

/// Number of distinct real roots in the open interval (low, high).
/// Requires low < high and neither endpoint a root.
std::size_t countRootsIn(const Polynomial& p, const Rational& low, const Rational& high);

/// Isolating intervals, ascending and with strict gaps, for the real roots of
/// the product of the inputs. All inputs must be nonconstant and univariate in
/// the same variable. An interval that already holds a single root is never
/// refined unless it touches a neighbour.
std::vector<Interval> realRootIsolation(std::span<const Polynomial> polys);

/// One rational sample per open cell of the real line cut by the roots of the
/// inputs: below the first isolating interval, between consecutive intervals
/// and above the last. {0} when there are no roots. Constant inputs are ignored.
std::vector<Rational> samplePoints(std::span<const Polynomial> polys);

}  // namespace ocad
