#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's algebra kernels.

#include <cstdint>
#include <random>
#include <vector>

#include "ocad/polynomial.hpp"
#include "ocad/rational.hpp"

namespace oracle {

using ocad::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi) {
    for (;;) {
      const auto v = integer(lo, hi);
      if (v != 0) return v;
    }
  }
  Rational rational(std::int64_t bound, std::int64_t maxDen) {
    return Rational(mpz_class(integer(-bound, bound)), mpz_class(integer(1, maxDen)));
  }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Dense univariate polynomial over Q, coefficients low to high.
using Dense = std::vector<Rational>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

inline Dense multiply(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

/// c * prod (x - r_i).
inline Dense fromRoots(const std::vector<Rational>& roots, const Rational& c = Rational(1)) {
  Dense p{c};
  for (const auto& r : roots) p = multiply(p, Dense{-r, Rational(1)});
  return p;
}

inline Rational horner(const Dense& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Laplace expansion along the first row. Only for small matrices.
inline Rational cofactorDeterminant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational det(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].isZero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][col] * cofactorDeterminant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

/// Sylvester matrix of two dense polynomials of degrees m, n >= 1.
inline std::vector<std::vector<Rational>> sylvester(const Dense& a, const Dense& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  return s;
}

/// lc(a)^deg(b) * lc(b)^deg(a) * prod (r_i - s_j) for a = ca*prod(x - r_i), b = cb*prod(x - s_j).
inline Rational resultantFromRoots(const Rational& ca, const std::vector<Rational>& ra, const Rational& cb,
                                   const std::vector<Rational>& rb) {
  Rational out = ca.pow(static_cast<unsigned>(rb.size())) * cb.pow(static_cast<unsigned>(ra.size()));
  for (const auto& r : ra)
    for (const auto& s : rb) out *= r - s;
  return out;
}

/// 1 + max |a_i / a_n|.
inline Rational cauchyBound(const Dense& p) {
  Rational best(0);
  const Rational lc = p.back().abs();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Rational q = p[i].abs() / lc;
    if (q > best) best = q;
  }
  return best + Rational(1);
}

inline ocad::Polynomial toPolynomial(const Dense& p, const ocad::UniversePtr& u, ocad::Var v) {
  ocad::Polynomial out(u);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += ocad::Polynomial::variable(u, v, static_cast<std::uint32_t>(i)) * p[i];
  }
  return out;
}

/// Coefficient at the monomial x^i * y^j of a bivariate polynomial given as a
/// list of (i, j, c) triples.
struct Term {
  std::uint32_t i, j;
  Rational c;
};

inline ocad::Polynomial bivariate(const std::vector<Term>& terms, const ocad::UniversePtr& u) {
  ocad::Polynomial out(u);
  for (const auto& t : terms) {
    out += ocad::Polynomial::variable(u, ocad::Var{0}, t.i) * ocad::Polynomial::variable(u, ocad::Var{1}, t.j) * t.c;
  }
  return out;
}

/// Direct evaluation at (x, y) from the term list.
inline Rational evalBivariate(const std::vector<Term>& terms, const Rational& x, const Rational& y) {
  Rational acc(0);
  for (const auto& t : terms) acc += t.c * x.pow(t.i) * y.pow(t.j);
  return acc;
}

/// Random bivariate polynomial with total degree <= maxDegree and small integer coefficients.
inline std::vector<Term> randomBivariate(Rng& rng, unsigned maxDegree, std::int64_t coeffBound) {
  std::vector<Term> terms;
  for (;;) {
    terms.clear();
    bool nonconstant = false;
    for (std::uint32_t i = 0; i <= maxDegree; ++i) {
      for (std::uint32_t j = 0; i + j <= maxDegree; ++j) {
        if (rng.integer(0, 2) == 0) continue;
        const auto c = rng.integer(-coeffBound, coeffBound);
        if (c == 0) continue;
        terms.push_back({i, j, Rational(c)});
        nonconstant = nonconstant || i + j > 0;
      }
    }
    if (nonconstant) return terms;
  }
}

}  // namespace oracle
