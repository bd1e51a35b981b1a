#include "ocad/polynomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "ocad/errors.hpp"

namespace ocad {

VariableUniverse::VariableUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable '" + n + "'");
  }
}

const std::string& VariableUniverse::name(Var v) const {
  if (v.id >= names_.size()) throw InvalidArgument("unknown variable id " + std::to_string(v.id));
  return names_[v.id];
}

std::optional<Var> VariableUniverse::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Var{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

Var VariableUniverse::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InvalidArgument("unknown variable '" + std::string(name) + "'");
}

std::vector<Var> VariableUniverse::all() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Var{static_cast<std::uint32_t>(i)});
  return out;
}

UniversePtr makeUniverse(std::vector<std::string> names) {
  return std::make_shared<const VariableUniverse>(std::move(names));
}

namespace {

bool sameUniverse(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void checkVar(const UniversePtr& u, Var v) {
  if (!u || v.id >= u->size()) throw InvalidArgument("variable id out of range");
}

}  // namespace

// ---------------------------------------------------------------- PointAssignment

bool PointAssignment::binds(Var v) const {
  return std::any_of(bindings_.begin(), bindings_.end(), [v](const auto& b) { return b.first == v; });
}

const Rational& PointAssignment::at(Var v) const {
  for (const auto& [var, value] : bindings_) {
    if (var == v) return value;
  }
  throw InvalidArgument("variable not bound in point");
}

PointAssignment PointAssignment::extended(Var v, Rational value) const {
  if (binds(v)) throw InvalidArgument("variable already bound in point");
  PointAssignment out = *this;
  out.bindings_.emplace_back(v, std::move(value));
  return out;
}

bool operator==(const PointAssignment& a, const PointAssignment& b) {
  if (a.bindings_ != b.bindings_) return false;
  if (a.bindings_.empty()) return true;
  return sameUniverse(a.universe_, b.universe_);
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(UniversePtr universe, TermMap terms) : universe_(std::move(universe)) {
  const std::size_t n = universe_ ? universe_->size() : 0;
  for (auto& [exps, coeff] : terms) {
    if (exps.size() != n) throw InvalidArgument("exponent vector length does not match universe");
    if (!coeff.isZero()) terms_.emplace(exps, std::move(coeff));
  }
}

Polynomial Polynomial::constant(UniversePtr universe, const Rational& value) {
  Polynomial p(std::move(universe));
  if (!value.isZero()) p.terms_.emplace(Exponents(p.universe_ ? p.universe_->size() : 0, 0), value);
  return p;
}

Polynomial Polynomial::variable(UniversePtr universe, Var v, std::uint32_t power) {
  checkVar(universe, v);
  Polynomial p(std::move(universe));
  Exponents e(p.universe_->size(), 0);
  e[v.id] = power;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool Polynomial::isConstant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational Polynomial::constantValue() const {
  if (!isConstant()) throw InvalidArgument("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::uint32_t Polynomial::totalDegree() const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

std::vector<Var> Polynomial::support() const {
  const std::size_t n = universe_ ? universe_->size() : 0;
  std::vector<bool> present(n, false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < n; ++i) present[i] = present[i] || e[i] > 0;
  }
  std::vector<Var> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (present[i]) out.push_back(Var{static_cast<std::uint32_t>(i)});
  }
  return out;
}

bool Polynomial::involves(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v.id] > 0; });
}

const Rational& Polynomial::leadingCoefficient() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

void Polynomial::requireSameUniverse(const Polynomial& o) const {
  if (!sameUniverse(universe_, o.universe_)) {
    throw InvalidArgument("polynomials belong to different variable universes");
  }
}

void Polynomial::addScaled(const Polynomial& o, const Rational& scale) {
  if (o.terms_.empty()) return;
  if (&o == this) {
    *this *= Rational(1) + scale;
    return;
  }
  if (!universe_) universe_ = o.universe_;
  requireSameUniverse(o);
  auto hint = terms_.begin();
  for (const auto& [e, c] : o.terms_) {
    hint = terms_.lower_bound(e);
    if (hint != terms_.end() && hint->first == e) {
      hint->second += c * scale;
      if (hint->second.isZero()) hint = terms_.erase(hint);
    } else {
      hint = terms_.emplace_hint(hint, e, c * scale);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  addScaled(o, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  addScaled(o, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.isZero()) return Polynomial(a.universe_ ? a.universe_ : b.universe_);
  if (b.isZero()) return Polynomial(b.universe_ ? b.universe_ : a.universe_);
  a.requireSameUniverse(b);
  Polynomial out(a.universe_);
  const std::size_t n = a.universe_->size();
  Polynomial::Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second.isZero(); });
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(universe_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty()) return true;
  return sameUniverse(a.universe_, b.universe_);
}

// ---------------------------------------------------------------- free functions

UnivariateView coefficientsIn(const Polynomial& p, Var v) {
  checkVar(p.universe(), v);
  UnivariateView view{v, {}};
  const std::uint32_t d = degreeIn(p, v);
  std::vector<Polynomial::TermMap> parts(p.isZero() ? 1 : d + 1);
  for (const auto& [e, c] : p.terms()) {
    auto stripped = e;
    const auto k = stripped[v.id];
    stripped[v.id] = 0;
    parts[k].emplace(std::move(stripped), c);
  }
  for (auto& part : parts) view.coefficients.emplace_back(p.universe(), std::move(part));
  return view;
}

Polynomial assemble(const UniversePtr& universe, const UnivariateView& view) {
  Polynomial out(universe);
  for (std::size_t k = 0; k < view.coefficients.size(); ++k) {
    if (view.coefficients[k].isZero()) continue;
    out += view.coefficients[k] * Polynomial::variable(universe, view.mainVariable, static_cast<std::uint32_t>(k));
  }
  return out;
}

std::uint32_t degreeIn(const Polynomial& p, Var v) {
  checkVar(p.universe(), v);
  std::uint32_t d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v.id]);
  return d;
}

Polynomial leadCoeff(const Polynomial& p, Var v) {
  if (p.isZero()) throw InvalidArgument("leadCoeff of the zero polynomial");
  return coefficientsIn(p, v).coefficients.back();
}

Polynomial trailCoeff(const Polynomial& p, Var v) {
  if (p.isZero()) throw InvalidArgument("trailCoeff of the zero polynomial");
  checkVar(p.universe(), v);
  Polynomial::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    if (e[v.id] == 0) t.emplace(e, c);
  }
  return Polynomial(p.universe(), std::move(t));
}

Polynomial evaluate(const Polynomial& p, const PointAssignment& point) {
  if (point.empty() || p.isZero()) return p;
  // Powers of each bound value are cached per variable.
  std::vector<std::pair<Var, std::vector<Rational>>> powers;
  for (const auto& [v, value] : point.bindings()) {
    checkVar(p.universe(), v);
    powers.emplace_back(v, std::vector<Rational>{Rational(1)});
  }
  auto power = [](std::vector<Rational>& cache, const Rational& base, std::uint32_t k) -> const Rational& {
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  Polynomial::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    Rational coeff = c;
    auto stripped = e;
    for (std::size_t i = 0; i < powers.size(); ++i) {
      const Var v = powers[i].first;
      if (e[v.id] == 0) continue;
      coeff *= power(powers[i].second, point.bindings()[i].second, e[v.id]);
      stripped[v.id] = 0;
    }
    auto it = out.find(stripped);
    if (it == out.end()) {
      out.emplace(std::move(stripped), std::move(coeff));
    } else {
      it->second += coeff;
    }
  }
  return Polynomial(p.universe(), std::move(out));
}

Polynomial derivative(const Polynomial& p, Var v) {
  checkVar(p.universe(), v);
  Polynomial::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[v.id] == 0) continue;
    auto d = e;
    d[v.id] -= 1;
    out.emplace(std::move(d), c * Rational(static_cast<std::int64_t>(e[v.id])));
  }
  return Polynomial(p.universe(), std::move(out));
}

bool canonicalLess(const Polynomial& a, const Polynomial& b) {
  const auto da = a.totalDegree();
  const auto db = b.totalDegree();
  if (da != db) return da < db;
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

}  // namespace ocad
