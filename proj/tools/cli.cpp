#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocad/errors.hpp"
#include "ocad/expression.hpp"
#include "ocad/lifting.hpp"
#include "ocad/projection.hpp"
#include "ocad/realroots.hpp"
#include "ocad/solver.hpp"

namespace ocad::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ProblemOptions {
  std::string vars;
  std::vector<std::string> polys;
  std::string order;
  std::string format = "json";
};

struct Problem {
  UniversePtr universe;
  std::vector<Polynomial> polys;
  std::optional<std::vector<Var>> ordering;
  bool json = true;
};

std::vector<std::string> splitCsv(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    const auto first = current.find_first_not_of(" \t");
    const auto last = current.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidArgument("empty name in list '" + text + "'");
    out.push_back(current.substr(first, last - first + 1));
    current.clear();
  };
  for (const char c : text) {
    if (c == ',') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return out;
}

Problem buildProblem(const ProblemOptions& o) {
  Problem p;
  p.json = o.format == "json";
  std::vector<std::string> names;
  if (!o.vars.empty()) {
    names = splitCsv(o.vars);
  } else {
    for (const auto& text : o.polys) {
      for (auto& id : identifiersIn(text)) {
        if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(std::move(id));
      }
    }
  }
  p.universe = makeUniverse(names);
  for (const auto& text : o.polys) {
    try {
      p.polys.push_back(parsePolynomial(text, p.universe));
    } catch (const ParseError& e) {
      throw InvalidArgument("in \"" + text + "\": " + e.what());
    }
  }
  if (!o.order.empty()) {
    std::vector<Var> ordering;
    for (const auto& name : splitCsv(o.order)) ordering.push_back(p.universe->at(name));
    if (ordering.size() != p.universe->size()) throw InvalidArgument("--order must list every variable exactly once");
    p.ordering = std::move(ordering);
  }
  return p;
}

void addProblemOptions(CLI::App* cmd, ProblemOptions& o, bool needsOrder) {
  cmd->add_option("--vars", o.vars, "Comma-separated variable names in declaration order");
  cmd->add_option("--poly", o.polys, "Polynomial expression (repeatable)")->required()->take_all();
  if (needsOrder) cmd->add_option("--order", o.order, "Comma-separated forced ordering x1,...,xn (x1 lowest)");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

Json pointJson(const PointAssignment& point) {
  Json out = Json::object();
  for (const auto& [v, value] : point.bindings()) out[point.universe()->name(v)] = value.toFraction();
  return out;
}

std::string pointText(const PointAssignment& point) {
  std::string out;
  for (const auto& [v, value] : point.bindings()) {
    if (!out.empty()) out += ", ";
    out += point.universe()->name(v) + " = " + value.toString();
  }
  return out;
}

void writeJson(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int doSolve(const ProblemOptions& o, std::ostream& out) {
  const Problem p = buildProblem(o);
  const SolveResult r = findPositiveSolution(p.polys, p.ordering);
  if (p.json) {
    Json j = Json::object();
    j["satisfiable"] = r.satisfiable;
    j["witness"] = r.witness ? pointJson(*r.witness) : Json(nullptr);
    writeJson(out, j);
  } else if (r.satisfiable) {
    out << "satisfiable\n" << pointText(*r.witness) << '\n';
  } else {
    out << "unsatisfiable\n";
  }
  return 0;
}

int doCad(const ProblemOptions& o, std::ostream& out) {
  const Problem p = buildProblem(o);
  const CadTree tree = openCAD(p.polys, p.ordering);
  if (p.json) {
    out << serializeTree(tree) << '\n';
  } else {
    const auto leaves = tree.leaves();
    out << leaves.size() << " cells\n";
    for (const auto& leaf : leaves) out << pointText(leaf) << '\n';
  }
  return 0;
}

int doProject(const ProblemOptions& o, std::ostream& out) {
  const Problem p = buildProblem(o);
  const ProjectionChain chain = projectionPhase(p.polys, p.ordering);
  if (p.json) {
    Json j = Json::object();
    Json ordering = Json::array();
    for (const Var v : chain.ordering) ordering.push_back(p.universe->name(v));
    j["ordering"] = std::move(ordering);
    Json levels = Json::array();
    for (const auto& level : chain.levels) {
      Json l = Json::array();
      for (const auto& f : level) l.push_back(render(f));
      levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    writeJson(out, j);
  } else {
    out << "ordering:";
    for (std::size_t i = 0; i < chain.ordering.size(); ++i) {
      out << (i == 0 ? " " : " < ") << p.universe->name(chain.ordering[i]);
    }
    out << '\n';
    for (std::size_t k = 0; k < chain.levels.size(); ++k) {
      out << "level " << k + 1 << ":\n";
      for (const auto& f : chain.levels[k]) out << "  " << render(f) << '\n';
    }
  }
  return 0;
}

void requireUnivariate(const Problem& p) {
  std::vector<Var> used;
  for (const auto& f : p.polys) {
    for (const Var v : f.support()) {
      if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    }
  }
  if (p.universe->size() > 1 || used.size() > 1) throw InvalidArgument("this command needs a single variable");
}

int doIsolate(const ProblemOptions& o, std::ostream& out) {
  const Problem p = buildProblem(o);
  requireUnivariate(p);
  std::vector<Polynomial> nonconstant;
  for (const auto& f : p.polys) {
    if (f.isZero()) throw InvalidArgument("cannot isolate the roots of the zero polynomial");
    if (!f.isConstant()) nonconstant.push_back(f);
  }
  const auto intervals = nonconstant.empty() ? std::vector<Interval>{} : realRootIsolation(nonconstant);
  if (p.json) {
    Json list = Json::array();
    for (const auto& i : intervals) list.push_back(Json::array({i.low.toFraction(), i.high.toFraction()}));
    writeJson(out, Json{{"intervals", std::move(list)}});
  } else {
    for (const auto& i : intervals) out << '[' << i.low.toString() << ", " << i.high.toString() << "]\n";
  }
  return 0;
}

int doSample(const ProblemOptions& o, std::ostream& out) {
  const Problem p = buildProblem(o);
  requireUnivariate(p);
  for (const auto& f : p.polys) {
    if (f.isZero()) throw InvalidArgument("cannot sample around the zero polynomial");
  }
  const auto samples = samplePoints(p.polys);
  if (p.json) {
    Json list = Json::array();
    for (const auto& s : samples) list.push_back(s.toFraction());
    writeJson(out, Json{{"samples", std::move(list)}});
  } else {
    for (const auto& s : samples) out << s.toString() << '\n';
  }
  return 0;
}

int doBenchSpheres(unsigned n, bool countOnly, const std::string& format, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto polys = genSpheres(n);
  const CadTree tree = openCAD(polys);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::size_t cells = tree.leafCount();
  if (countOnly) {
    out << cells << '\n';
  } else if (format == "json") {
    writeJson(out, Json{{"n", n}, {"cells", cells}, {"seconds", seconds}});
  } else {
    out << "n = " << n << ", cells = " << cells << ", seconds = " << seconds << '\n';
  }
  return 0;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open cylindrical algebraic decomposition over the rationals", "ocad"};
  app.require_subcommand(1);

  ProblemOptions solveOpts, cadOpts, projectOpts, isolateOpts, sampleOpts;
  auto* solve = app.add_subcommand("solve", "Find a point where every polynomial is strictly positive");
  addProblemOptions(solve, solveOpts, true);
  auto* cad = app.add_subcommand("cad", "Print the open CAD sample tree");
  addProblemOptions(cad, cadOpts, true);
  auto* project = app.add_subcommand("project", "Print the projection sets and variable ordering");
  addProblemOptions(project, projectOpts, true);
  auto* isolate = app.add_subcommand("isolate", "Print isolating intervals of the real roots");
  addProblemOptions(isolate, isolateOpts, false);
  auto* sample = app.add_subcommand("sample", "Print one rational sample per open interval");
  addProblemOptions(sample, sampleOpts, false);

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* spheres = bench->add_subcommand("spheres", "Open CAD of two intersecting hyperspheres");
  unsigned sphereN = 0;
  bool countOnly = false;
  std::string benchFormat = "json";
  spheres->add_option("--n", sphereN, "Dimension")->required()->check(CLI::PositiveNumber);
  spheres->add_flag("--count-only", countOnly, "Print only the cell count");
  spheres->add_option("--format", benchFormat, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*solve) return doSolve(solveOpts, out);
    if (*cad) return doCad(cadOpts, out);
    if (*project) return doProject(projectOpts, out);
    if (*isolate) return doIsolate(isolateOpts, out);
    if (*sample) return doSample(sampleOpts, out);
    if (*spheres) return doBenchSpheres(sphereN, countOnly, benchFormat, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace ocad::cli
