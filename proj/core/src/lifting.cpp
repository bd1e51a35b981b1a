#include "ocad/lifting.hpp"

#include <algorithm>

#include "ocad/errors.hpp"
#include "ocad/realroots.hpp"

namespace ocad {

std::size_t CadTree::leafCount() const {
  if (isLeaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leafCount();
  return n;
}

const CadTree* CadTree::child(const Rational& value) const {
  const auto it = std::lower_bound(sampleValues.begin(), sampleValues.end(), value);
  if (it == sampleValues.end() || *it != value) return nullptr;
  return &children[static_cast<std::size_t>(it - sampleValues.begin())];
}

std::vector<PointAssignment> CadTree::leaves() const {
  std::vector<PointAssignment> out;
  std::vector<const CadTree*> stack{this};
  while (!stack.empty()) {
    const CadTree* node = stack.back();
    stack.pop_back();
    if (node->isLeaf()) {
      out.push_back(node->point);
      continue;
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

std::vector<Polynomial> evaluatePolynomials(std::span<const Polynomial> polys, const PointAssignment& point) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    Polynomial e = evaluate(p, point);
    if (e.isZero()) throw NongenericSample("a projection polynomial vanishes identically at a sample point");
    if (!e.isConstant()) out.push_back(std::move(e));
  }
  return out;
}

CadTree liftingPoint(const ProjectionChain& chain, const PointAssignment& point) {
  const std::size_t n = chain.dimension();
  const std::size_t bound = point.size();
  if (bound > n) throw InvalidArgument("point binds more variables than the decomposition has");
  for (std::size_t i = 0; i < bound; ++i) {
    if (point.bindings()[i].first != chain.ordering[i]) {
      throw InvalidArgument("point must bind a prefix of the variable ordering, in order");
    }
  }
  CadTree node;
  node.point = point.universe() || !chain.universe ? point : PointAssignment(chain.universe);
  if (bound == n) return node;

  node.polynomials = evaluatePolynomials(chain.levels[bound], point);
  node.sampleValues = samplePoints(node.polynomials);
  node.children.reserve(node.sampleValues.size());
  const Var next = chain.ordering[bound];
  for (const auto& s : node.sampleValues) node.children.push_back(liftingPoint(chain, point.extended(next, s)));
  return node;
}

}  // namespace ocad
