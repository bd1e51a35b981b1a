#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ocad/lifting.hpp"

namespace ocad {

struct SolveResult {
  bool satisfiable = false;
  /// Present iff satisfiable; every input is strictly positive here.
  std::optional<PointAssignment> witness;
};

/// Open CAD of R^n with respect to `polys`. Constant inputs are ignored; at
/// least one nonconstant polynomial is required.
CadTree openCAD(std::span<const Polynomial> polys,
                const std::optional<std::vector<Var>>& forcedOrdering = std::nullopt);

/// First leaf (depth-first, ascending keys) at which every polynomial is
/// strictly positive.
std::optional<PointAssignment> positivePoint(std::span<const Polynomial> polys, const CadTree& tree);

/// Decides whether all of `polys` can be made strictly positive at once.
SolveResult findPositiveSolution(std::span<const Polynomial> polys,
                                 const std::optional<std::vector<Var>>& forcedOrdering = std::nullopt);

/// The two hyperspheres sum (x_i - 1)^2 - 4 and sum (x_i + 1)^2 - 4 over
/// variables x1..xn.
std::vector<Polynomial> genSpheres(unsigned n);

}  // namespace ocad
