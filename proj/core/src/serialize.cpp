#include <algorithm>

#include "json.hpp"

#include "ocad/errors.hpp"
#include "ocad/expression.hpp"
#include "ocad/lifting.hpp"

namespace ocad {

namespace {

using Json = nlohmann::ordered_json;

Json pointToJson(const PointAssignment& point) {
  Json out = Json::object();
  for (const auto& [v, value] : point.bindings()) out[point.universe()->name(v)] = value.toFraction();
  return out;
}

Json nodeToJson(const CadTree& node) {
  Json out = Json::object();
  out["point"] = pointToJson(node.point);
  if (node.isLeaf()) return out;
  Json polys = Json::array();
  for (const auto& p : node.polynomials) polys.push_back(render(p));
  out["polynomials"] = std::move(polys);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    out[node.sampleValues[i].toFraction()] = nodeToJson(node.children[i]);
  }
  return out;
}

Rational parseRational(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string", 0);
  try {
    return Rational::fromString(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

CadTree nodeFromJson(const Json& j, const UniversePtr& universe) {
  if (!j.is_object() || !j.contains("point") || !j["point"].is_object()) {
    throw ParseError("tree node must be an object with a \"point\" object", 0);
  }
  CadTree node;
  node.point = PointAssignment(universe);
  for (const auto& [name, value] : j["point"].items()) {
    const auto v = universe->find(name);
    if (!v) throw ParseError("unknown variable '" + name + "' in point", 0);
    node.point = node.point.extended(*v, parseRational(value));
  }
  if (!j.contains("polynomials")) {
    if (j.size() != 1) throw ParseError("leaf node carries unexpected keys", 0);
    return node;
  }
  const Json& polys = j["polynomials"];
  if (!polys.is_array()) throw ParseError("\"polynomials\" must be an array", 0);
  for (const auto& p : polys) {
    if (!p.is_string()) throw ParseError("polynomials must be strings", 0);
    node.polynomials.push_back(parsePolynomial(p.get<std::string>(), universe));
  }
  std::vector<std::pair<Rational, CadTree>> kids;
  for (const auto& [key, child] : j.items()) {
    if (key == "point" || key == "polynomials") continue;
    kids.emplace_back(parseRational(Json(key)), nodeFromJson(child, universe));
  }
  std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, child] : kids) {
    node.sampleValues.push_back(key);
    node.children.push_back(std::move(child));
  }
  return node;
}

}  // namespace

std::string serializeTree(const CadTree& tree, int indent) {
  if (!tree.point.universe() && !tree.point.empty()) throw InvalidArgument("tree point has no variable universe");
  return nodeToJson(tree).dump(indent);
}

CadTree deserializeTree(std::string_view document, const UniversePtr& universe) {
  if (!universe) throw InvalidArgument("no variable universe");
  Json j;
  try {
    j = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  return nodeFromJson(j, universe);
}

}  // namespace ocad
