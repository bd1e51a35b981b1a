#include "ocad/realroots.hpp"

#include <optional>

#include "ocad/errors.hpp"

namespace ocad {

namespace {

Var univariateVariable(const Polynomial& p) {
  const auto s = p.support();
  if (s.empty()) throw InvalidArgument("expected a nonconstant polynomial");
  if (s.size() > 1) throw InvalidArgument("expected a univariate polynomial");
  return s.front();
}

std::vector<Rational> denseRationals(const Polynomial& p, Var v) {
  std::vector<Rational> coeffs(degreeIn(p, v) + 1);
  for (const auto& [e, c] : p.terms()) coeffs[e[v.id]] = c;
  return coeffs;
}

dense::IntPoly toDense(const Polynomial& p, Var v) { return dense::IntPoly::fromRationals(denseRationals(p, v)); }

// Remainder of a by b over the rationals, both dense low-to-high.
std::vector<Rational> remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    while (!a.empty() && a.back().isZero()) a.pop_back();
  }
  return a;
}

Polynomial fromRationals(const UniversePtr& u, const std::vector<Rational>& c, Var v) {
  Polynomial::TermMap terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Polynomial::Exponents e(u->size(), 0);
    e[v.id] = static_cast<std::uint32_t>(k);
    terms.emplace(std::move(e), c[k]);
  }
  return Polynomial(u, std::move(terms));
}

}  // namespace

Rational rootBound(const Polynomial& p) { return dense::rootBound(toDense(p, univariateVariable(p))); }

std::vector<Polynomial> sturmSequence(const Polynomial& p) {
  const Var v = univariateVariable(p);
  // Squarefree part over Q, keeping p's own scaling when p is already squarefree.
  std::vector<Rational> p0 = denseRationals(p, v);
  const dense::IntPoly d = toDense(p, v);
  const dense::IntPoly g = dense::gcd(d, d.derivative());
  if (g.degree() > 0) {
    const auto sf = dense::exactQuotient(d, g);
    p0.clear();
    for (const auto& c : sf.coefficients()) p0.emplace_back(c);
  }
  std::vector<std::vector<Rational>> seq{p0};
  std::vector<Rational> p1;
  for (std::size_t k = 1; k < p0.size(); ++k) p1.push_back(p0[k] * Rational(static_cast<std::int64_t>(k)));
  seq.push_back(std::move(p1));
  while (seq.back().size() > 1) {
    auto r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<Polynomial> out;
  for (const auto& s : seq) out.push_back(fromRationals(p.universe(), s, v));
  return out;
}

std::size_t countRootsIn(const Polynomial& p, const Rational& low, const Rational& high) {
  const Var v = univariateVariable(p);
  if (!(low < high)) throw InvalidArgument("countRootsIn needs low < high");
  const auto sf = dense::squarefreePart(toDense(p, v));
  if (sf.signAt(low) == 0 || sf.signAt(high) == 0) throw InvalidArgument("interval endpoint is a root");
  const auto chain = dense::sturmChain(sf);
  return static_cast<std::size_t>(dense::signVariations(chain, low) - dense::signVariations(chain, high));
}

std::vector<Interval> realRootIsolation(std::span<const Polynomial> polys) {
  if (polys.empty()) throw InvalidArgument("realRootIsolation needs at least one polynomial");
  std::optional<Var> var;
  dense::IntPoly product({mpz_class(1)});
  for (const auto& p : polys) {
    const Var v = univariateVariable(p);
    if (var && *var != v) throw InvalidArgument("polynomials are univariate in different variables");
    var = v;
    product = product * toDense(p, v);
  }
  return dense::isolateRoots(dense::squarefreePart(product));
}

std::vector<Rational> samplePoints(std::span<const Polynomial> polys) {
  std::vector<Polynomial> live;
  for (const auto& p : polys) {
    if (!p.isConstant()) live.push_back(p);
  }
  if (live.empty()) return {Rational(0)};
  const auto intervals = realRootIsolation(live);
  if (intervals.empty()) return {Rational(0)};

  std::vector<Rational> samples;
  samples.push_back(intervals.front().low - Rational(1));
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    samples.push_back((intervals[i].high + intervals[i + 1].low) / Rational(2));
  }
  samples.push_back(intervals.back().high + Rational(1));

  const Var v = live.front().support().front();
  for (const auto& p : live) {
    const auto d = toDense(p, v);
    for (const auto& s : samples) {
      if (d.signAt(s) == 0) throw InternalError("sample point " + s.toString() + " is a root");
    }
  }
  return samples;
}

}  // namespace ocad
