#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ocad/algebra.hpp"
#include "ocad/errors.hpp"
#include "ocad/realroots.hpp"
#include "oracles.hpp"

using namespace ocad;

namespace {

Rational constantOf(const Polynomial& p) { return p.constantValue(); }

oracle::Dense randomDense(oracle::Rng& rng, int degree) {
  oracle::Dense d;
  for (int i = 0; i <= degree; ++i) d.push_back(rng.rational(9, 4));
  if (d.back().isZero()) d.back() = Rational(1);
  return d;
}

Polynomial randomTrivariate(oracle::Rng& rng, const UniversePtr& u, int terms) {
  Polynomial p(u);
  while (p.isConstant()) {
    p = Polynomial(u);
    for (int t = 0; t < terms; ++t) {
      Polynomial m = Polynomial::constant(u, Rational(rng.nonzero(-5, 5)));
      for (std::uint32_t v = 0; v < u->size(); ++v) {
        m = m * Polynomial::variable(u, Var{v}, static_cast<std::uint32_t>(rng.integer(0, 2)));
      }
      p += m;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("canonical form is primitive with a positive leading coefficient") {
  const auto u = makeUniverse({"x", "y"});
  CHECK(render(canonical(parsePolynomial("-4*x^2 + 4", u))) == "x^2 - 1");
  CHECK(render(canonical(parsePolynomial("1/2*x*y - 1/3", u))) == "3*x*y - 2");
  CHECK(canonical(Polynomial(u)).isZero());
}

TEST_CASE("exact division") {
  const auto u = makeUniverse({"x", "y"});
  const auto p = parsePolynomial("x^2 - y^2", u);
  CHECK(render(divideExact(p, parsePolynomial("x - y", u))) == "x + y");
  CHECK_FALSE(tryDivide(p, parsePolynomial("x + 2*y", u)));
  CHECK_THROWS_AS(divideExact(p, parsePolynomial("x + 2*y", u)), InternalError);
}

TEST_CASE("resultant of the two Jirstrand polynomials") {
  const auto u = makeUniverse({"x1", "x2"});
  const auto r = resultant(parsePolynomial("x2^2 + x1^2 - 1", u), parsePolynomial("-x2^2 + x1^3", u), Var{1});
  CHECK(r == parsePolynomial("(x1^3 + x1^2 - 1)^2", u));
}

TEST_CASE("univariate resultants match the cofactor expansion of the Sylvester matrix") {
  oracle::Rng rng(21);
  const auto u = makeUniverse({"x"});
  for (int iter = 0; iter < 60; ++iter) {
    const auto a = randomDense(rng, static_cast<int>(rng.integer(1, 4)));
    const auto b = randomDense(rng, static_cast<int>(rng.integer(1, 4)));
    const Rational expected = oracle::cofactorDeterminant(oracle::sylvester(a, b));
    const auto pa = oracle::toPolynomial(a, u, Var{0});
    const auto pb = oracle::toPolynomial(b, u, Var{0});
    CHECK(constantOf(resultant(pa, pb, Var{0})) == expected);
  }
}

TEST_CASE("resultant root-product identity") {
  oracle::Rng rng(22);
  const auto u = makeUniverse({"x"});
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Rational> ra, rb;
    for (auto n = rng.integer(1, 4); n > 0; --n) ra.push_back(rng.rational(10, 4));
    for (auto n = rng.integer(1, 4); n > 0; --n) rb.push_back(rng.rational(10, 4));
    const Rational ca = rng.nonzero(-6, 6), cb = rng.nonzero(-6, 6);
    const auto pa = oracle::toPolynomial(oracle::fromRoots(ra, ca), u, Var{0});
    const auto pb = oracle::toPolynomial(oracle::fromRoots(rb, cb), u, Var{0});
    CHECK(constantOf(resultant(pa, pb, Var{0})) == oracle::resultantFromRoots(ca, ra, cb, rb));
  }
}

TEST_CASE("multivariate resultants specialise like the Sylvester determinant") {
  oracle::Rng rng(23);
  const auto u = makeUniverse({"x", "y"});
  const Var x{0}, y{1};
  for (int iter = 0; iter < 40; ++iter) {
    const auto p = randomTrivariate(rng, u, 4);
    const auto q = randomTrivariate(rng, u, 4);
    if (degreeIn(p, y) == 0 || degreeIn(q, y) == 0) continue;
    const auto r = resultant(p, q, y);
    for (int k = 0; k < 3; ++k) {
      const auto at = PointAssignment(u).extended(x, rng.rational(6, 3));
      const auto ps = evaluate(p, at), qs = evaluate(q, at);
      if (degreeIn(ps, y) != degreeIn(p, y) || degreeIn(qs, y) != degreeIn(q, y)) continue;
      oracle::Dense da, db;
      const auto va = coefficientsIn(ps, y), vb = coefficientsIn(qs, y);
      for (const auto& c : va.coefficients) da.push_back(c.isZero() ? Rational(0) : c.constantValue());
      for (const auto& c : vb.coefficients) db.push_back(c.isZero() ? Rational(0) : c.constantValue());
      CHECK(evaluate(r, at).constantValue() == oracle::cofactorDeterminant(oracle::sylvester(da, db)));
    }
  }
}

TEST_CASE("discriminants") {
  const auto u = makeUniverse({"a", "b", "c", "x", "y"});
  const Var x = u->at("x"), y = u->at("y");
  CHECK(discriminant(parsePolynomial("a*x^2 + b*x + c", u), x) == parsePolynomial("b^2 - 4*a*c", u));
  CHECK(discriminant(parsePolynomial("x^5 + 5*x^4 + 5*x^3 - 5*x^2 - 6*x - 2*y", u), x) ==
        parsePolynomial("16*(3125*y^4 - 11875*y^2 + 5184)", u));
  CHECK(discriminant(parsePolynomial("(x - 3)^2*(x + 1)", u), x).isZero());
  CHECK(discriminant(parsePolynomial("x^2 + y^2 - 1", u), y) == parsePolynomial("4 - 4*x^2", u));
}

TEST_CASE("gcd divides both inputs and contains the planted common factor") {
  oracle::Rng rng(31);
  const auto u = makeUniverse({"x", "y", "z"});
  for (int iter = 0; iter < 40; ++iter) {
    const auto a = randomTrivariate(rng, u, 3);
    const auto b = randomTrivariate(rng, u, 3);
    const auto c = randomTrivariate(rng, u, 3);
    const auto p = a * c, q = b * c;
    const auto g = gcd(p, q);
    CHECK(tryDivide(p, g).has_value());
    CHECK(tryDivide(q, g).has_value());
    CHECK(tryDivide(g, c).has_value());
    CHECK(g == canonical(g));
  }
  CHECK(render(gcd(parsePolynomial("x^2 - 1", u), parsePolynomial("x^2 + 2*x + 1", u))) == "x + 1");
  CHECK(render(gcd(parsePolynomial("x*y", u), parsePolynomial("x*z", u))) == "x");
  CHECK(render(gcd(parsePolynomial("x + y", u), parsePolynomial("x - y", u))) == "1");
}

TEST_CASE("content and squarefree part") {
  const auto u = makeUniverse({"x", "y"});
  const Var y{1};
  CHECK(render(contentIn(parsePolynomial("(x^2 - 1)*y^2 + (x - 1)*y", u), y)) == "x - 1");
  CHECK(squarefreePart(parsePolynomial("(x - 1)^3*(x + y)^2", u)) == canonical(parsePolynomial("(x - 1)*(x + y)", u)));
}

TEST_CASE("factorsInList reproduces the Jirstrand base factors") {
  const auto u = makeUniverse({"x1"});
  const auto in = testing::parseAll(u, {"x1^2 - 1", "-4*(x1^2 - 1)", "x1^3", "x1^3 + x1^2 - 1"});
  auto out = testing::renderAll(factorsInList(in));
  std::sort(out.begin(), out.end());
  CHECK(out == std::vector<std::string>{"x1", "x1 + 1", "x1 - 1", "x1^3 + x1^2 - 1"});
}

TEST_CASE("factorsInList keeps the real root set and returns a coprime squarefree basis") {
  oracle::Rng rng(41);
  const auto u = makeUniverse({"x"});
  const Var x{0};
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Polynomial> in;
    std::vector<Rational> roots;
    for (auto n = rng.integer(1, 4); n > 0; --n) {
      std::vector<Rational> rs;
      for (auto k = rng.integer(0, 3); k > 0; --k) rs.push_back(rng.rational(6, 3));
      auto dense = oracle::fromRoots(rs, Rational(rng.nonzero(-4, 4)));
      if (rng.coin()) dense = oracle::multiply(dense, {Rational(rng.integer(1, 5)), Rational(0), Rational(1)});
      if (dense.size() < 2) {
        rs = {Rational(0)};
        dense = oracle::fromRoots(rs);
      }
      roots.insert(roots.end(), rs.begin(), rs.end());
      in.push_back(oracle::toPolynomial(dense, u, x));
    }
    const auto basis = factorsInList(in);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i] == canonical(basis[i]));
      CHECK(squarefreePart(basis[i]) == basis[i]);
      for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).isConstant());
    }
    const auto intervals = realRootIsolation(basis);
    REQUIRE(intervals.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(intervals[i].low <= roots[i]);
      CHECK(roots[i] <= intervals[i].high);
    }
  }
}

TEST_CASE("factorsInList splits multivariate content") {
  const auto u = makeUniverse({"x", "y"});
  auto out = testing::renderAll(factorsInList(testing::parseAll(u, {"(x^2 - 1)*(y^2 + x)", "2*y^2 + 2*x"})));
  std::sort(out.begin(), out.end());
  CHECK(out == std::vector<std::string>{"x + 1", "x - 1", "y^2 + x"});
}
