#pragma once

#include <span>
#include <string>
#include <vector>

#include "ocad/polynomial.hpp"
#include "ocad/projection.hpp"

namespace ocad {

/// Tree of open-cell sample points. An internal node at level k holds the
/// (k-1)-dimensional point below it, F_k evaluated there, and one child per
/// sample value of x_k (ascending). A leaf holds a full n-dimensional point.
struct CadTree {
  PointAssignment point;
  std::vector<Polynomial> polynomials;
  std::vector<Rational> sampleValues;
  std::vector<CadTree> children;

  bool isLeaf() const noexcept { return children.empty(); }
  std::size_t leafCount() const;
  /// Child whose key is `value`, or nullptr.
  const CadTree* child(const Rational& value) const;
  /// Leaf points in depth-first, ascending-key order.
  std::vector<PointAssignment> leaves() const;

  friend bool operator==(const CadTree&, const CadTree&) = default;
};

/// Evaluates each polynomial at `point`; nonzero constants are dropped and the
/// order of the survivors is kept. A result that is identically zero throws
/// NongenericSample.
std::vector<Polynomial> evaluatePolynomials(std::span<const Polynomial> polys, const PointAssignment& point);

/// Open CAD above `point`, which must bind exactly the first k-1 variables of
/// the chain's ordering (in order) for some 1 <= k <= n+1.
CadTree liftingPoint(const ProjectionChain& chain, const PointAssignment& point);

/// Deterministic JSON document: internal nodes are
/// {"point": {...}, "polynomials": [...], "<num/den>": child, ...} with
/// children in ascending key order; leaves are {"point": {...}}. Rationals are
/// "num/den" strings.
std::string serializeTree(const CadTree& tree, int indent = 2);
CadTree deserializeTree(std::string_view document, const UniversePtr& universe);

}  // namespace ocad
