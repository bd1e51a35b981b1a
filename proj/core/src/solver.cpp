#include "ocad/solver.hpp"

#include <string>

#include "ocad/errors.hpp"

namespace ocad {

CadTree openCAD(std::span<const Polynomial> polys, const std::optional<std::vector<Var>>& forcedOrdering) {
  bool anyNonconstant = false;
  for (const auto& p : polys) anyNonconstant = anyNonconstant || !p.isConstant();
  if (!anyNonconstant) throw InvalidArgument("openCAD needs at least one nonconstant polynomial");
  const ProjectionChain chain = projectionPhase(polys, forcedOrdering);
  return liftingPoint(chain, PointAssignment(chain.universe));
}

std::optional<PointAssignment> positivePoint(std::span<const Polynomial> polys, const CadTree& tree) {
  const auto leaves = tree.leaves();
  if (leaves.empty()) return std::nullopt;
  for (const auto& p : polys) {
    for (const Var v : p.support()) {
      if (!leaves.front().binds(v)) throw InvalidArgument("polynomial involves a variable the tree does not bind");
    }
  }
  for (const auto& leaf : leaves) {
    bool allPositive = true;
    for (const auto& p : polys) {
      const Polynomial value = evaluate(p, leaf);
      if (value.constantValue().sign() <= 0) {
        allPositive = false;
        break;
      }
    }
    if (allPositive) return leaf;
  }
  return std::nullopt;
}

SolveResult findPositiveSolution(std::span<const Polynomial> polys,
                                 const std::optional<std::vector<Var>>& forcedOrdering) {
  std::vector<Polynomial> kept;
  UniversePtr universe;
  for (const auto& p : polys) {
    if (!universe) universe = p.universe();
    if (p.isConstant()) {
      if (p.isZero() || p.constantValue().sign() < 0) return {};
      continue;
    }
    kept.push_back(p);
  }
  if (kept.empty()) {
    if (polys.empty()) throw InvalidArgument("findPositiveSolution needs at least one polynomial");
    return {true, PointAssignment(universe)};
  }
  const CadTree tree = openCAD(kept, forcedOrdering);
  auto witness = positivePoint(kept, tree);
  if (!witness) return {};
  return {true, std::move(witness)};
}

std::vector<Polynomial> genSpheres(unsigned n) {
  if (n == 0) throw InvalidArgument("genSpheres needs n >= 1");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  const auto u = makeUniverse(std::move(names));
  Polynomial a = Polynomial::constant(u, Rational(-4));
  Polynomial b = Polynomial::constant(u, Rational(-4));
  const Polynomial one = Polynomial::constant(u, Rational(1));
  for (const Var v : u->all()) {
    const Polynomial x = Polynomial::variable(u, v);
    a += (x - one).pow(2);
    b += (x + one).pow(2);
  }
  return {a, b};
}

}  // namespace ocad
