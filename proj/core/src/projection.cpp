#include "ocad/projection.hpp"

#include <algorithm>

#include "ocad/algebra.hpp"
#include "ocad/errors.hpp"

namespace ocad {

Var gmodsHeuristic(std::span<const Polynomial> polys, std::span<const Var> candidates) {
  if (candidates.empty()) throw InvalidArgument("gmodsHeuristic needs at least one variable");
  std::optional<Var> best;
  std::uint64_t bestSum = 0;
  for (const Var v : candidates) {
    std::uint64_t sum = 0;
    for (const auto& p : polys) sum += degreeIn(p, v);
    if (!best || sum < bestSum || (sum == bestSum && v > *best)) {
      best = v;
      bestSum = sum;
    }
  }
  return *best;
}

std::vector<Polynomial> lazardProjection(std::span<const Polynomial> polys, Var v) {
  const auto basis = factorsInList(polys);
  std::vector<Polynomial> involved;
  std::vector<Polynomial> collected;
  for (const auto& f : basis) {
    (f.involves(v) ? involved : collected).push_back(f);
  }
  for (const auto& f : involved) {
    collected.push_back(leadCoeff(f, v));
    if (auto tc = trailCoeff(f, v); !tc.isZero()) collected.push_back(std::move(tc));
    if (degreeIn(f, v) >= 2) collected.push_back(discriminant(f, v));
  }
  for (std::size_t i = 0; i < involved.size(); ++i) {
    for (std::size_t j = i + 1; j < involved.size(); ++j) {
      auto r = resultant(involved[i], involved[j], v);
      if (r.isZero()) throw InternalError("zero resultant between coprime basis elements");
      collected.push_back(std::move(r));
    }
  }
  return factorsInList(collected);
}

ProjectionChain projectionPhase(std::span<const Polynomial> polys, const std::optional<std::vector<Var>>& forcedOrdering) {
  ProjectionChain chain;
  std::vector<Polynomial> inputs;
  std::vector<Var> present;
  for (const auto& p : polys) {
    if (p.isZero()) throw InvalidArgument("the zero polynomial cannot be decomposed");
    if (p.isConstant()) {
      chain.droppedConstants = true;
      continue;
    }
    if (!chain.universe) chain.universe = p.universe();
    inputs.push_back(p);
    for (const Var v : p.support()) present.push_back(v);
  }
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  std::vector<Var> remaining = present;
  if (forcedOrdering) {
    remaining = *forcedOrdering;
    auto sorted = remaining;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("forced ordering repeats a variable");
    }
    for (const Var v : present) {
      if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
        throw InvalidArgument("forced ordering misses a variable of the input");
      }
    }
  }
  if (!chain.universe && !polys.empty()) chain.universe = polys.front().universe();
  if (remaining.empty()) throw InvalidArgument("projectionPhase needs a nonconstant polynomial or a forced ordering");

  std::vector<Polynomial> current = factorsInList(inputs);
  std::vector<std::vector<Polynomial>> levelsTopDown{current};
  std::vector<Var> eliminated;
  while (remaining.size() > 1) {
    const Var v = forcedOrdering ? remaining.back() : gmodsHeuristic(current, remaining);
    current = lazardProjection(current, v);
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));
    eliminated.push_back(v);
    levelsTopDown.push_back(current);
  }
  eliminated.push_back(remaining.front());

  chain.ordering.assign(eliminated.rbegin(), eliminated.rend());
  chain.levels.assign(levelsTopDown.rbegin(), levelsTopDown.rend());
  return chain;
}

}  // namespace ocad
