#include <benchmark/benchmark.h>

#include "ccs/montecarlo.hpp"

using namespace ccs;

namespace {

McOptions options(long samples, bool parallel) {
  McOptions opt;
  opt.lambda = 5;
  opt.samples = samples;
  opt.seed = 42;
  opt.parallel = parallel;
  return opt;
}

void bm_gram(benchmark::State& state, bool parallel) {
  auto basis = enumerate_basis(5, 2);
  for (auto _ : state) {
    McGram g = mc_gram(basis, options(state.range(0), parallel));
    benchmark::DoNotOptimize(g.value.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_inner(benchmark::State& state, bool parallel) {
  BasisIndex a{5, 1, 1, 1, -1}, b{5, 1, 1, 1, -1};
  PointEvaluator fa = [a](const Mat2& z) { return basis_eval(a, z); };
  PointEvaluator fb = [b](const Mat2& z) { return basis_eval(b, z); };
  for (auto _ : state) {
    McEstimate e = mc_inner_product(fa, fb, options(state.range(0), parallel));
    benchmark::DoNotOptimize(e.value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_kernel_sum(benchmark::State& state) {
  CartanPoint z(Mat2(0.3, cplx(0.1, 0.05), cplx(-0.07, 0.02), -0.2));
  CartanPoint zp(Mat2(-0.1, cplx(0.2, -0.1), 0.05, 0.25));
  for (auto _ : state) {
    cplx v = kernel_partial_sum(z, zp, 4, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_gram, serial, false)->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK_CAPTURE(bm_gram, parallel, true)->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK_CAPTURE(bm_inner, serial, false)->Arg(1 << 16)->Arg(1 << 18);
BENCHMARK_CAPTURE(bm_inner, parallel, true)->Arg(1 << 16)->Arg(1 << 18);
BENCHMARK(bm_kernel_sum)->Arg(10)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
