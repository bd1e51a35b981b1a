#pragma once

#include <string>
#include <vector>

#include "ocad/expression.hpp"
#include "ocad/polynomial.hpp"

namespace testing {

inline std::vector<ocad::Polynomial> parseAll(const ocad::UniversePtr& u, const std::vector<std::string>& texts) {
  std::vector<ocad::Polynomial> out;
  for (const auto& t : texts) out.push_back(ocad::parsePolynomial(t, u));
  return out;
}

inline std::vector<std::string> renderAll(const std::vector<ocad::Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(ocad::render(p));
  return out;
}

}  // namespace testing
