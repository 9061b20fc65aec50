#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccs/montecarlo.hpp"

using namespace ccs;

namespace {

McOptions opts(long samples, bool parallel, unsigned long long seed = 7) {
  McOptions o;
  o.lambda = 5;
  o.samples = samples;
  o.seed = seed;
  o.parallel = parallel;
  return o;
}

PointEvaluator one() {
  return [](const Mat2&) { return cplx(1.0); };
}

}  // namespace

TEST_CASE("serial and parallel sweeps are bit identical") {
  auto basis = enumerate_basis(5, 2);
  McGram gs = mc_gram(basis, opts(40000, false));
  McGram gp = mc_gram(basis, opts(40000, true));
  CHECK(gs.dim == gp.dim);
  CHECK(gs.accepted == gp.accepted);
  for (size_t i = 0; i < gs.value.size(); ++i) {
    CHECK(gs.value[i] == gp.value[i]);  // exact, not approximate
    CHECK(gs.std_error[i] == gp.std_error[i]);
  }
  McEstimate es = mc_inner_product(one(), one(), opts(40000, false));
  McEstimate ep = mc_inner_product(one(), one(), opts(40000, true));
  CHECK(es.value == ep.value);
  CHECK(es.std_error == ep.std_error);
}

TEST_CASE("same seed reproduces, different seed does not") {
  McEstimate a = mc_inner_product(one(), one(), opts(20000, true, 11));
  McEstimate b = mc_inner_product(one(), one(), opts(20000, true, 11));
  McEstimate c = mc_inner_product(one(), one(), opts(20000, true, 12));
  CHECK(a.value == b.value);
  CHECK(a.value != c.value);
}

TEST_CASE("measure normalizes to one") {
  McEstimate e = mc_inner_product(one(), one(), opts(400000, true));
  CHECK(e.std_error > 0.0);
  CHECK(std::abs(e.value.real() - 1.0) < 3.0 * e.std_error);
  CHECK(std::abs(e.value.imag()) < 1e-12);
}

TEST_CASE("basis orthonormality within statistics") {
  auto basis = enumerate_basis(5, 1);  // 1 + 4 states
  McGram g = mc_gram(basis, opts(400000, true));
  int n = g.dim;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cplx want = (r == c) ? 1.0 : 0.0;
      double err = std::max(g.std_error[r * n + c], 1e-12);
      CHECK(std::abs(g.value[r * n + c] - want) < 4.0 * err);
    }
}

TEST_CASE("sample bookkeeping") {
  McEstimate e = mc_inner_product(one(), one(), opts(12345, true));
  CHECK(e.samples == 12345);
  CHECK(e.accepted > 0);
  CHECK(e.accepted <= e.samples);
}

TEST_CASE("normalized measure needs lambda >= 4") {
  McOptions o = opts(100, true);
  o.lambda = 3;
  CHECK_THROWS_AS(mc_inner_product(one(), one(), o), InvalidScaleDimension);
}
