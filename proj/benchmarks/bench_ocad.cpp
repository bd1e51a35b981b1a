#include <benchmark/benchmark.h>

#include "ocad/algebra.hpp"
#include "ocad/expression.hpp"
#include "ocad/realroots.hpp"
#include "ocad/solver.hpp"

namespace {

void BM_OpenCadSpheres(benchmark::State& state) {
  const auto polys = ocad::genSpheres(static_cast<unsigned>(state.range(0)));
  std::size_t cells = 0;
  for (auto _ : state) {
    cells = ocad::openCAD(polys).leafCount();
    benchmark::DoNotOptimize(cells);
  }
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_OpenCadSpheres)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Jirstrand(benchmark::State& state) {
  const auto u = ocad::makeUniverse({"x1", "x2"});
  const std::vector<ocad::Polynomial> f{ocad::parsePolynomial("x1^2 + x2^2 - 1", u),
                                        ocad::parsePolynomial("x1^3 - x2^2", u)};
  for (auto _ : state) benchmark::DoNotOptimize(ocad::findPositiveSolution(f));
}
BENCHMARK(BM_Jirstrand)->Unit(benchmark::kMicrosecond);

void BM_IsolateLargeCoefficients(benchmark::State& state) {
  const auto u = ocad::makeUniverse({"x"});
  const std::vector<ocad::Polynomial> p{ocad::parsePolynomial(
      "(999983*x - 1000000)*(777777*x + 123457)*(3*x - 999999)*(x + 1/1000000)*(524287*x - 3)", u)};
  for (auto _ : state) benchmark::DoNotOptimize(ocad::realRootIsolation(p));
}
BENCHMARK(BM_IsolateLargeCoefficients)->Unit(benchmark::kMicrosecond);

void BM_Resultant(benchmark::State& state) {
  const auto u = ocad::makeUniverse({"x", "y", "z"});
  const auto p = ocad::parsePolynomial("(x - 1)^2 + (y - 1)^2 + (z - 1)^2 - 4", u);
  const auto q = ocad::parsePolynomial("(x + 1)^2 + (y + 1)^2 + (z + 1)^2 - 4", u);
  for (auto _ : state) benchmark::DoNotOptimize(ocad::resultant(p, q, ocad::Var{2}));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
