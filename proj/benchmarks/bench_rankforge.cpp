#include <benchmark/benchmark.h>

#include "rankforge/family.hpp"
#include "rankforge/heights.hpp"
#include "rankforge/quartic.hpp"

namespace {

using namespace rankforge;

const QuarticSolution kSeed{Int(21), Int(20), Int(7), Int(19)};

void BM_GroupLawAdd(benchmark::State& state) {
  const WeierstrassCurve& curve = helper_curve();
  const CurvePoint p = helper_generator();
  const CurvePoint q = scalar_mul(curve, Int(5), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(curve, p, q));
  }
}
BENCHMARK(BM_GroupLawAdd);

void BM_ScalarMul100(benchmark::State& state) {
  const WeierstrassCurve& curve = helper_curve();
  const CurvePoint p = helper_generator();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_mul(curve, Int(100), p));
  }
}
BENCHMARK(BM_ScalarMul100);

void BM_DivisionPoly12(benchmark::State& state) {
  for (auto _ : state) {
    DivisionPolyContext ctx(helper_curve(), helper_generator());
    benchmark::DoNotOptimize(ctx.eval(12));
  }
}
BENCHMARK(BM_DivisionPoly12);

void BM_ParametrizedSolution(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parametrized_solution(n, true));
  }
}
BENCHMARK(BM_ParametrizedSolution)->Arg(2)->Arg(4)->Arg(6);

void BM_BuildInstance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_instance(kSeed));
  }
}
BENCHMARK(BM_BuildInstance);

void BM_DescendStep(benchmark::State& state) {
  const SurfacePoint p0 = to_surface_point(kSeed);
  for (auto _ : state) {
    benchmark::DoNotOptimize(descend_step(p0));
  }
}
BENCHMARK(BM_DescendStep);

void BM_CanonicalHeight(benchmark::State& state) {
  const FamilyInstance inst = build_instance(kSeed);
  const HeightContext ctx = HeightContext::for_instance(inst);
  HeightOptions opt;
  opt.tol = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_height(ctx, inst.points[0], opt));
  }
}
BENCHMARK(BM_CanonicalHeight);

void BM_Certify(benchmark::State& state) {
  const FamilyInstance inst = build_instance(kSeed);
  HeightOptions opt;
  opt.tol = 1e-8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(inst, opt));
  }
}
BENCHMARK(BM_Certify);

void BM_Factor(benchmark::State& state) {
  const Int n("126878400");
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor(n));
  }
}
BENCHMARK(BM_Factor);

}  // namespace

BENCHMARK_MAIN();
