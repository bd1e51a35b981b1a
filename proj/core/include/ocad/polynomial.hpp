#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocad/rational.hpp"

namespace ocad {

/// Index of a variable inside its VariableUniverse.
struct Var {
  std::uint32_t id = 0;
  friend auto operator<=>(Var, Var) = default;
};

/// Ordered list of distinct variable names. Position is identity; the order is
/// declaration order and has nothing to do with the CAD projection order.
class VariableUniverse {
 public:
  explicit VariableUniverse(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Var v) const;
  std::optional<Var> find(std::string_view name) const;
  /// Throws InvalidArgument for unknown names.
  Var at(std::string_view name) const;
  std::vector<Var> all() const;

  friend bool operator==(const VariableUniverse& a, const VariableUniverse& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

UniversePtr makeUniverse(std::vector<std::string> names);

/// A rational point in a subset of the coordinates, kept in binding order.
class PointAssignment {
 public:
  PointAssignment() = default;
  explicit PointAssignment(UniversePtr universe) : universe_(std::move(universe)) {}

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<std::pair<Var, Rational>>& bindings() const noexcept { return bindings_; }
  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }

  bool binds(Var v) const;
  const Rational& at(Var v) const;
  /// Copy with one more binding. Throws if v is already bound.
  PointAssignment extended(Var v, Rational value) const;

  friend bool operator==(const PointAssignment& a, const PointAssignment& b);

 private:
  UniversePtr universe_;
  std::vector<std::pair<Var, Rational>> bindings_;
};

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// variable universe. Terms are keyed by exponent vector in lexicographic
/// order (first declared variable most significant); no stored coefficient is
/// zero, so equal polynomials have identical term maps.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(UniversePtr universe) : universe_(std::move(universe)) {}
  Polynomial(UniversePtr universe, TermMap terms);

  static Polynomial constant(UniversePtr universe, const Rational& value);
  static Polynomial variable(UniversePtr universe, Var v, std::uint32_t power = 1);

  const UniversePtr& universe() const noexcept { return universe_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t termCount() const noexcept { return terms_.size(); }

  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const;
  /// Value of a constant polynomial; throws InvalidArgument otherwise.
  Rational constantValue() const;
  std::uint32_t totalDegree() const;
  /// Variables with a positive exponent somewhere, ascending by id.
  std::vector<Var> support() const;
  bool involves(Var v) const;

  /// Coefficient of the lexicographically greatest term.
  const Rational& leadingCoefficient() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Polynomial with the same terms over another (compatible) universe object.
  Polynomial zeroLike() const { return Polynomial(universe_); }

 private:
  void requireSameUniverse(const Polynomial& o) const;
  void addScaled(const Polynomial& o, const Rational& scale);

  UniversePtr universe_;
  TermMap terms_;
};

/// A polynomial viewed as univariate in `mainVariable` with polynomial
/// coefficients free of it; coefficients[k] multiplies mainVariable^k.
struct UnivariateView {
  Var mainVariable;
  std::vector<Polynomial> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

UnivariateView coefficientsIn(const Polynomial& p, Var v);
Polynomial assemble(const UniversePtr& universe, const UnivariateView& view);

std::uint32_t degreeIn(const Polynomial& p, Var v);
/// Coefficient of v^degreeIn(p, v). Throws InvalidArgument for the zero polynomial.
Polynomial leadCoeff(const Polynomial& p, Var v);
/// Coefficient of v^0 (possibly zero). Throws InvalidArgument for the zero polynomial.
Polynomial trailCoeff(const Polynomial& p, Var v);
/// Exact substitution of every bound variable; unbound variables pass through.
Polynomial evaluate(const Polynomial& p, const PointAssignment& point);
Polynomial derivative(const Polynomial& p, Var v);

/// Total order used for canonical lists: by total degree, then term by term
/// from the greatest monomial.
bool canonicalLess(const Polynomial& a, const Polynomial& b);

}  // namespace ocad
