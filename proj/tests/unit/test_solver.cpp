#include "doctest.h"
#include "helpers.hpp"
#include "ocad/errors.hpp"
#include "ocad/solver.hpp"
#include "oracles.hpp"

using namespace ocad;

namespace {

bool allPositive(const std::vector<Polynomial>& polys, const PointAssignment& at) {
  for (const auto& p : polys) {
    if (evaluate(p, at).constantValue().sign() <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("openCAD leaf counts") {
  const auto u = makeUniverse({"x", "y"});
  CHECK(openCAD(testing::parseAll(u, {"x"})).leafCount() == 2);
  CHECK(openCAD(testing::parseAll(u, {"x^2 + y^2 - 1"})).leafCount() == 5);
  CHECK_THROWS_AS(openCAD(testing::parseAll(u, {"2", "-1"})), InvalidArgument);
}

TEST_CASE("positivePoint picks the first qualifying leaf") {
  const auto u = makeUniverse({"x", "y"});
  const auto fx = testing::parseAll(u, {"x"});
  const auto w = positivePoint(fx, openCAD(fx));
  REQUIRE(w);
  CHECK(w->at(Var{0}) == Rational(1));
  const auto neg = testing::parseAll(u, {"-1 - x^2"});
  CHECK_FALSE(positivePoint(neg, openCAD(neg)));
  CHECK_THROWS_AS(positivePoint(testing::parseAll(u, {"y"}), openCAD(fx)), InvalidArgument);
}

TEST_CASE("findPositiveSolution on the motivating example") {
  const auto u = makeUniverse({"x"});
  const auto f = testing::parseAll(u, {"3 - x^2", "(7*x - 12)*(x^2 + x + 1)"});
  const auto r = findPositiveSolution(f);
  REQUIRE(r.satisfiable);
  REQUIRE(r.witness);
  const Rational x = r.witness->at(Var{0});
  CHECK(Rational(mpz_class(12), mpz_class(7)) < x);
  CHECK(x * x < Rational(3));
  CHECK(allPositive(f, *r.witness));
}

TEST_CASE("findPositiveSolution on the Jirstrand system") {
  const auto u = makeUniverse({"x1", "x2"});
  const auto f = testing::parseAll(u, {"x1^2 + x2^2 - 1", "x1^3 - x2^2"});
  const auto r = findPositiveSolution(f);
  REQUIRE(r.witness);
  CHECK(allPositive(f, *r.witness));
  // Reversing the ordering may change the witness but not the answer.
  const auto rev = findPositiveSolution(f, std::vector<Var>{Var{1}, Var{0}});
  REQUIRE(rev.witness);
  CHECK(allPositive(f, *rev.witness));
}

TEST_CASE("constants are handled before the decomposition") {
  const auto u = makeUniverse({"x"});
  CHECK_FALSE(findPositiveSolution(testing::parseAll(u, {"-x^2 - 1"})).satisfiable);
  CHECK_FALSE(findPositiveSolution(testing::parseAll(u, {"x", "-2"})).satisfiable);
  CHECK_FALSE(findPositiveSolution(testing::parseAll(u, {"x", "0"})).satisfiable);
  const auto r = findPositiveSolution(testing::parseAll(u, {"x - 3", "5"}));
  REQUIRE(r.witness);
  CHECK(r.witness->at(Var{0}) > Rational(3));
  const auto c = findPositiveSolution(testing::parseAll(u, {"1/2"}));
  CHECK(c.satisfiable);
  CHECK(c.witness->empty());
}

TEST_CASE("scaling by a positive constant changes nothing") {
  const auto u = makeUniverse({"x1", "x2"});
  const auto f = testing::parseAll(u, {"x1^2 + x2^2 - 1", "x1^3 - x2^2"});
  const auto g = testing::parseAll(u, {"3*(x1^2 + x2^2 - 1)", "1/5*(x1^3 - x2^2)"});
  const auto a = findPositiveSolution(f), b = findPositiveSolution(g);
  CHECK(a.satisfiable == b.satisfiable);
  CHECK(a.witness == b.witness);
}

TEST_CASE("genSpheres") {
  const auto s1 = genSpheres(1);
  CHECK(testing::renderAll(s1) == std::vector<std::string>{"x1^2 - 2*x1 - 3", "x1^2 + 2*x1 - 3"});
  const auto s3 = genSpheres(3);
  CHECK(s3[0].universe()->names() == std::vector<std::string>{"x1", "x2", "x3"});
  const auto center = PointAssignment(s3[0].universe())
                          .extended(Var{0}, Rational(1))
                          .extended(Var{1}, Rational(1))
                          .extended(Var{2}, Rational(1));
  CHECK(evaluate(s3[0], center).constantValue() == Rational(-4));
  CHECK_THROWS_AS(genSpheres(0), InvalidArgument);
  CHECK(openCAD(genSpheres(1)).leafCount() == 5);
  CHECK(openCAD(genSpheres(2)).leafCount() == 29);
}

TEST_CASE("the answer does not depend on the variable ordering") {
  oracle::Rng rng(808);
  const auto u = makeUniverse({"x", "y"});
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Polynomial> system;
    for (auto k = rng.integer(2, 3); k > 0; --k) system.push_back(oracle::bivariate(oracle::randomBivariate(rng, 3, 5), u));
    const auto a = findPositiveSolution(system);
    std::vector<Var> reversed;
    for (const Var v : projectionPhase(system).ordering) reversed.insert(reversed.begin(), v);
    const auto b = findPositiveSolution(system, reversed);
    CHECK(a.satisfiable == b.satisfiable);
    if (b.witness) CHECK(allPositive(system, *b.witness));
  }
}
