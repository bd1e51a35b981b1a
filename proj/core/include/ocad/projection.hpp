#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ocad/polynomial.hpp"

namespace ocad {

/// Projection polynomial sets F_1, ..., F_n together with the variable
/// ordering x_1 < ... < x_n; levels[k-1] only involves x_1..x_k and x_n is the
/// variable projected first.
struct ProjectionChain {
  UniversePtr universe;
  std::vector<std::vector<Polynomial>> levels;
  std::vector<Var> ordering;
  /// Set when nonzero constant inputs were discarded.
  bool droppedConstants = false;

  std::size_t dimension() const { return ordering.size(); }
  friend bool operator==(const ProjectionChain& a, const ProjectionChain& b) {
    return a.levels == b.levels && a.ordering == b.ordering && a.droppedConstants == b.droppedConstants;
  }
};

/// Variable with the smallest sum of degrees across `polys`; ties go to the
/// variable declared last. Throws InvalidArgument for an empty candidate list.
Var gmodsHeuristic(std::span<const Polynomial> polys, std::span<const Var> candidates);

/// Lazard projection with respect to v of the factor basis of `polys`: leading
/// coefficients, nonzero trailing coefficients, discriminants (degree >= 2),
/// pairwise resultants, plus every basis element free of v, reduced again to
/// a factor basis.
std::vector<Polynomial> lazardProjection(std::span<const Polynomial> polys, Var v);

/// Full projection phase. Without `forcedOrdering` the next variable to
/// eliminate is chosen by gmodsHeuristic among the variables of the input;
/// with it, the given order x_1 < ... < x_n is used as is and must cover every
/// variable of the input. Zero inputs are rejected.
ProjectionChain projectionPhase(std::span<const Polynomial> polys,
                                const std::optional<std::vector<Var>>& forcedOrdering = std::nullopt);

}  // namespace ocad
