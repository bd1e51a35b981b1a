#include "ocad/algebra.hpp"

#include <algorithm>

#include "ocad/dense.hpp"
#include "ocad/errors.hpp"

namespace ocad {

namespace {

Polynomial one(const UniversePtr& u) { return Polynomial::constant(u, Rational(1)); }

std::optional<Var> soleVariable(const Polynomial& p) {
  const auto s = p.support();
  if (s.size() == 1) return s.front();
  return std::nullopt;
}

dense::IntPoly toDense(const Polynomial& p, Var v) {
  std::vector<Rational> coeffs(degreeIn(p, v) + 1);
  for (const auto& [e, c] : p.terms()) coeffs[e[v.id]] = c;
  return dense::IntPoly::fromRationals(coeffs);
}

Polynomial fromDense(const UniversePtr& u, const dense::IntPoly& d, Var v) {
  Polynomial::TermMap terms;
  for (std::size_t k = 0; k < d.coefficients().size(); ++k) {
    if (d[k] == 0) continue;
    Polynomial::Exponents e(u->size(), 0);
    e[v.id] = static_cast<std::uint32_t>(k);
    terms.emplace(std::move(e), Rational(d[k]));
  }
  return Polynomial(u, std::move(terms));
}

std::vector<Var> unionSupport(const Polynomial& p, const Polynomial& q) {
  auto a = p.support();
  const auto b = q.support();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Certifies gcd(p, q) = const by specialising all but one variable at a time.
// If lc_w(p), lc_w(q) survive the specialisation, deg_w gcd(p, q) is at most
// the degree of the gcd of the specialised univariate polynomials. Returning
// false only means "unknown".
bool provablyCoprime(const Polynomial& p, const Polynomial& q) {
  const auto sp = p.support();
  const auto sq = q.support();
  std::vector<Var> common;
  std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(), std::back_inserter(common));
  if (common.empty()) return true;
  const auto all = unionSupport(p, q);
  const auto& u = p.universe();
  for (const Var w : common) {
    const Polynomial lp = leadCoeff(p, w);
    const Polynomial lq = leadCoeff(q, w);
    bool certified = false;
    for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
      PointAssignment pt(u);
      for (const Var x : all) {
        if (x == w) continue;
        pt = pt.extended(x, Rational(static_cast<std::int64_t>(2 + 13 * attempt + 5 * x.id + (x.id * x.id) % 7)));
      }
      if (evaluate(lp, pt).isZero() || evaluate(lq, pt).isZero()) continue;
      const auto g = dense::gcd(toDense(evaluate(p, pt), w), toDense(evaluate(q, pt), w));
      if (g.degree() > 0) return false;
      certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

Polynomial gcdRec(const Polynomial& p, const Polynomial& q);

Polynomial contentRaw(const Polynomial& p, Var v) {
  const auto view = coefficientsIn(p, v);
  Polynomial g(p.universe());
  for (const auto& c : view.coefficients) {
    if (c.isZero()) continue;
    g = gcdRec(g, c);
    if (g.isConstant()) return one(p.universe());
  }
  return canonical(g);
}

using View = std::vector<Polynomial>;

bool viewIsZero(const View& a) {
  return std::all_of(a.begin(), a.end(), [](const Polynomial& c) { return c.isZero(); });
}

void trimView(View& a) {
  while (a.size() > 1 && a.back().isZero()) a.pop_back();
}

// Pseudo-remainder of a by b, both as coefficient lists in the main variable.
View pseudoRemainder(View a, const View& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lcb = b.back();
  trimView(a);
  while (!viewIsZero(a) && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Polynomial lead = a.back();
    for (auto& c : a) c = c * lcb;
    for (std::size_t j = 0; j <= db; ++j) a[j + shift] -= lead * b[j];
    if (!a.back().isZero()) throw InternalError("pseudo-remainder failed to cancel the leading term");
    a.pop_back();
    trimView(a);
    if (a.empty()) break;
  }
  return a;
}

View primitiveView(View a) {
  Polynomial g(a.front().universe());
  for (const auto& c : a) {
    if (c.isZero()) continue;
    g = gcdRec(g, c);
    if (g.isConstant()) break;
  }
  if (!g.isConstant()) {
    for (auto& c : a) c = divideExact(c, g);
  }
  return a;
}

Polynomial gcdRec(const Polynomial& p, const Polynomial& q) {
  if (p.isZero()) return q;
  if (q.isZero()) return p;
  const auto& u = p.universe();
  if (p.isConstant() || q.isConstant()) return one(u);

  const auto vp = soleVariable(p);
  if (vp && vp == soleVariable(q)) {
    return fromDense(u, dense::gcd(toDense(p, *vp), toDense(q, *vp)), *vp);
  }
  if (provablyCoprime(p, q)) return one(u);

  const Var v = unionSupport(p, q).back();
  if (!p.involves(v)) return gcdRec(p, contentRaw(q, v));
  if (!q.involves(v)) return gcdRec(contentRaw(p, v), q);

  const Polynomial cp = contentRaw(p, v);
  const Polynomial cq = contentRaw(q, v);
  const Polynomial g = gcdRec(cp, cq);

  View a = coefficientsIn(divideExact(p, cp), v).coefficients;
  View b = coefficientsIn(divideExact(q, cq), v).coefficients;
  if (a.size() < b.size()) std::swap(a, b);
  for (;;) {
    View r = pseudoRemainder(a, b);
    if (viewIsZero(r)) break;
    if (r.size() == 1) return g;
    a = std::move(b);
    b = primitiveView(std::move(r));
  }
  b = primitiveView(std::move(b));
  return g * assemble(u, UnivariateView{v, std::move(b)});
}

// Multiplies out the Sylvester determinant by fraction-free elimination.
Polynomial bareissDeterminant(std::vector<std::vector<Polynomial>> m, const UniversePtr& u) {
  const std::size_t n = m.size();
  if (n == 0) return one(u);
  bool negate = false;
  Polynomial previous = one(u);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].isZero()) ++pivot;
      if (pivot == n) return Polynomial(u);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial numer = m[k][k] * m[i][j];
        if (!m[i][k].isZero() && !m[k][j].isZero()) numer -= m[i][k] * m[k][j];
        m[i][j] = previous.isConstant() ? numer * previous.constantValue().inverse() : divideExact(numer, previous);
      }
      m[i][k] = Polynomial(u);
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<Polynomial> splitContent(const Polynomial& p) {
  for (const Var v : p.support()) {
    const Polynomial c = contentRaw(p, v);
    if (!c.isConstant()) {
      auto out = splitContent(c);
      auto rest = splitContent(canonical(divideExact(p, c)));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  }
  return {p};
}

// Splits a squarefree univariate polynomial into its rational linear factors
// and the remaining cofactor.
std::vector<Polynomial> splitLinearFactors(const Polynomial& p, Var v) {
  const auto& u = p.universe();
  dense::IntPoly rest = toDense(p, v);
  std::vector<Polynomial> out;
  for (const auto& r : dense::rationalRoots(rest)) {
    const dense::IntPoly linear({mpz_class(-r.numerator()), r.denominator()});
    rest = dense::exactQuotient(rest, linear);
    out.push_back(fromDense(u, linear, v));
  }
  if (rest.degree() > 0) out.push_back(fromDense(u, rest, v));
  return out;
}

// Refines a list of squarefree polynomials into a pairwise coprime basis with
// the same zero set.
std::vector<Polynomial> coprimeBasis(std::vector<Polynomial> pending) {
  std::vector<Polynomial> basis;
  while (!pending.empty()) {
    Polynomial f = std::move(pending.back());
    pending.pop_back();
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Polynomial g = gcd(f, basis[i]);
      if (g.isConstant()) continue;
      const Polynomial b = std::move(basis[i]);
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      const Polynomial bRest = divideExact(b, g);
      const Polynomial fRest = divideExact(f, g);
      if (!bRest.isConstant()) basis.push_back(canonical(bRest));
      basis.push_back(g);
      if (!fRest.isConstant()) pending.push_back(canonical(fRest));
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace

Polynomial canonical(const Polynomial& p) {
  if (p.isZero()) return p;
  mpz_class numGcd = 0;
  mpz_class denLcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  Rational scale(denLcm, numGcd);
  if (p.leadingCoefficient().sign() < 0) scale = -scale;
  if (scale == Rational(1)) return p;
  return p * scale;
}

std::optional<Polynomial> tryDivide(const Polynomial& p, const Polynomial& q) {
  if (q.isZero()) throw InvalidArgument("division by the zero polynomial");
  if (p.isZero()) return p;
  if (q.isConstant()) return p * q.constantValue().inverse();
  const auto& [lq, lqCoeff] = *q.terms().rbegin();
  const std::size_t n = lq.size();
  Polynomial::TermMap rem = p.terms();
  Polynomial::TermMap quot;
  Polynomial::Exponents shift(n), e(n);
  while (!rem.empty()) {
    const auto& [lr, lrCoeff] = *rem.rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      if (lr[i] < lq[i]) return std::nullopt;
      shift[i] = lr[i] - lq[i];
    }
    const Rational c = lrCoeff / lqCoeff;
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = eq[i] + shift[i];
      auto it = rem.find(e);
      if (it == rem.end()) {
        rem.emplace(e, -(c * cq));
      } else {
        it->second -= c * cq;
        if (it->second.isZero()) rem.erase(it);
      }
    }
    quot.emplace(shift, c);
  }
  return Polynomial(p.universe(), std::move(quot));
}

Polynomial divideExact(const Polynomial& p, const Polynomial& q) {
  auto out = tryDivide(p, q);
  if (!out) throw InternalError("inexact polynomial division");
  return std::move(*out);
}

Polynomial contentIn(const Polynomial& p, Var v) {
  if (p.isZero()) return p;
  return contentRaw(p, v);
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.isZero()) return canonical(q);
  if (q.isZero()) return canonical(p);
  return canonical(gcdRec(p, q));
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v) {
  const auto a = coefficientsIn(p, v).coefficients;
  const auto b = coefficientsIn(q, v).coefficients;
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  if (p.isZero() || q.isZero() || m == 0 || n == 0) {
    throw InvalidArgument("resultant needs both polynomials of degree >= 1 in the variable");
  }
  const auto& u = p.universe();
  std::vector<std::vector<Polynomial>> sylvester(m + n, std::vector<Polynomial>(m + n, Polynomial(u)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) sylvester[i][i + j] = a[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) sylvester[n + i][i + j] = b[n - j];
  }
  return bareissDeterminant(std::move(sylvester), u);
}

Polynomial discriminant(const Polynomial& p, Var v) {
  const auto d = degreeIn(p, v);
  if (d < 2) throw InvalidArgument("discriminant needs degree >= 2 in the variable");
  Polynomial r = divideExact(resultant(p, derivative(p, v), v), leadCoeff(p, v));
  const auto pairs = static_cast<std::uint64_t>(d) * (d - 1) / 2;
  return pairs % 2 == 1 ? -r : r;
}

Polynomial squarefreePart(const Polynomial& p) {
  if (p.isConstant()) return canonical(p);
  if (const auto v = soleVariable(p)) return fromDense(p.universe(), dense::squarefreePart(toDense(p, *v)), *v);
  Polynomial g = p;
  for (const Var v : p.support()) {
    g = gcd(g, derivative(p, v));
    if (g.isConstant()) return canonical(p);
  }
  return canonical(divideExact(p, g));
}

std::vector<Polynomial> factorsInList(std::span<const Polynomial> polys) {
  std::vector<Polynomial> pieces;
  for (const auto& p : polys) {
    if (p.isConstant()) continue;
    for (const auto& part : splitContent(canonical(p))) {
      const Polynomial sf = squarefreePart(part);
      if (const auto v = soleVariable(sf)) {
        for (auto& f : splitLinearFactors(sf, *v)) pieces.push_back(canonical(f));
      } else {
        pieces.push_back(sf);
      }
    }
  }
  auto basis = coprimeBasis(std::move(pieces));
  for (auto& b : basis) b = canonical(b);
  std::sort(basis.begin(), basis.end(), canonicalLess);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

}  // namespace ocad
