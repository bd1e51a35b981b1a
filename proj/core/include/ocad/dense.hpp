#pragma once

// Dense univariate polynomials over the integers. This is the working
// representation behind root isolation and the univariate fast paths of the
// polynomial kernel; callers normally go through realroots.hpp.

#include <span>
#include <vector>

#include <gmpxx.h>

#include "ocad/rational.hpp"

namespace ocad::dense {

/// Closed rational interval [low, high]; low == high for an exact rational root.
struct Interval {
  Rational low;
  Rational high;

  bool isPoint() const { return low == high; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Integer polynomial, coefficients stored lowest degree first with no
/// trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coefficients);

  /// Positive rational multiple of the given polynomial with coprime integer
  /// coefficients (denominators cleared, content removed).
  static IntPoly fromRationals(std::span<const Rational> coefficients);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const noexcept { return c_.empty(); }
  bool isConstant() const noexcept { return c_.size() <= 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return c_; }
  const mpz_class& leading() const { return c_.back(); }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }

  mpz_class content() const;
  /// Divides out the (positive) content.
  IntPoly primitive() const;
  IntPoly derivative() const;
  IntPoly negated() const;

  /// Sign of p(x) for rational x, computed without fractions.
  int signAt(const Rational& x) const;
  Rational valueAt(const Rational& x) const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// r with |lc(b)|^k * a = q * b + r, deg r < deg b. The multiplier is positive
/// so signs of r match those of the true remainder.
IntPoly pseudoRemainder(const IntPoly& a, const IntPoly& b);
/// a / b where the quotient is known to be integral; throws InternalError otherwise.
IntPoly exactQuotient(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient; 1 when coprime.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefreePart(const IntPoly& p);

/// Sturm chain p, p', -rem, ... with each member scaled by a positive factor
/// to a primitive integer polynomial.
std::vector<IntPoly> sturmChain(const IntPoly& squarefree);
/// Sign variations of the chain at x, zeros skipped.
int signVariations(const std::vector<IntPoly>& chain, const Rational& x);

/// min(Cauchy, Fujiwara) bound on the absolute value of every real root.
Rational rootBound(const IntPoly& p);

/// Isolating intervals for every real root of a squarefree polynomial,
/// ascending with strict gaps between consecutive intervals.
std::vector<Interval> isolateRoots(const IntPoly& squarefree);

/// Shrinks an isolating interval of a squarefree polynomial by bisection until
/// its width is below maxWidth or the root is hit exactly.
Interval refine(const IntPoly& squarefree, Interval interval, const Rational& maxWidth);

/// All rational roots, ascending.
std::vector<Rational> rationalRoots(const IntPoly& p);

}  // namespace ocad::dense
