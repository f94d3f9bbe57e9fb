#include <benchmark/benchmark.h>

#include "afflat/affine.hpp"
#include "afflat/conics.hpp"
#include "afflat/kernels.hpp"
#include "afflat/polyhedra.hpp"
#include "afflat/polytope.hpp"

using namespace afflat;

namespace {

Exec mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

RatPoint point(std::initializer_list<const char*> coords) {
  RatPoint p;
  for (const char* c : coords) p.push_back(parse_rat(c));
  return p;
}

void PointsWithDen(benchmark::State& state) {
  auto c = convex_hull({point({"0", "0", "0"}), point({"3", "0", "0"}), point({"0", "5/2", "0"}),
                        point({"0", "0", "2"}), point({"2", "2", "3/2"})});
  for (auto _ : state) benchmark::DoNotOptimize(points_with_den(c, Int(9), mode(state)));
}

void GridPoints(benchmark::State& state) {
  RatVec lo{-2, -2, -2}, hi{2, 2, 2};
  auto keep = [](const RatPoint& x) { return dot(x, x) <= 3; };
  for (auto _ : state) benchmark::DoNotOptimize(grid_points(lo, hi, Int(7), keep, mode(state)));
}

void FirstIndex(benchmark::State& state) {
  auto pred = [](size_t i) {
    Int x(static_cast<unsigned long>(i));
    return i > 0 && mpz_probab_prime_p(Int(x * x + 1000003).get_mpz_t(), 15) != 0 && i % 49999 == 49998;
  };
  for (auto _ : state) benchmark::DoNotOptimize(first_index(200000, pred, mode(state)));
}

void EllipsePoints(benchmark::State& state) {
  auto e = make_ellipse(Conic{1, 0, 1, 0, 0, -1});
  for (auto _ : state) benchmark::DoNotOptimize(rational_points(e, 40, mode(state)));
}

void ApexCubeSearch(benchmark::State& state) {
  auto f = affine_span({point({"1/7", "0"}), point({"0", "2/7"})});
  auto w = c_invariant(f);
  std::vector<RatPoint> frame{w.simplex.vertices[0], w.simplex.vertices[1]};
  for (auto _ : state) benchmark::DoNotOptimize(apex_cube_search(frame, w.c, 64, mode(state)));
}

void PolyEquiv(benchmark::State& state) {
  Polyhedron p{{RatSimplex{{point({"0", "0"}), point({"1", "0"}), point({"0", "1/2"})}},
                RatSimplex{{point({"1", "0"}), point({"1", "1/3"})}}}};
  UniAffMap g(IntMat{{Int(2), Int(1)}, {Int(1), Int(1)}}, IntVec{Int(1), Int(-2)});
  auto q = apply(g, p);
  for (auto _ : state) benchmark::DoNotOptimize(poly_equiv(p, q, mode(state)));
}

}  // namespace

BENCHMARK(PointsWithDen)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(GridPoints)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(FirstIndex)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(EllipsePoints)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(ApexCubeSearch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(PolyEquiv)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
