#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccs/wigner.hpp"

using namespace ccs;

namespace {

Mat2 rand_mat2(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat2 z;
  for (auto& e : z.e) e = scale * cplx(u(rng), u(rng));
  return z;
}

Mat2 rand_unitary2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
  double a = u(rng), b = u(rng), c = u(rng), t = 0.5 * u(rng);
  cplx ea(std::cos(a), std::sin(a)), eb(std::cos(b), std::sin(b)),
      ec(std::cos(c), std::sin(c));
  return {ea * std::cos(t), eb * std::sin(t), -std::conj(eb) * ec * std::sin(t),
          std::conj(ea) * ec * std::cos(t)};
}

double wig_dist(const WignerMatrix& x, const WignerMatrix& y) {
  double mx = 0.0;
  for (size_t i = 0; i < x.entries.size(); ++i)
    mx = std::max(mx, std::abs(x.entries[i] - y.entries[i]));
  return mx;
}

WignerMatrix wig_mul(const WignerMatrix& x, const WignerMatrix& y) {
  WignerMatrix m(x.j);
  int d = x.j.dim();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < d; ++k)
        s += x.entries[r * d + k] * y.entries[k * d + c];
      m.entries[r * d + c] = s;
    }
  return m;
}

}  // namespace

TEST_CASE("spin one half is the identity map") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    Mat2 x = rand_mat2(rng, 1.0);
    WignerMatrix w = wigner_d(SpinLabel(1), x);
    CHECK((w.as_mat2() - x).max_abs() < 1e-14);
  }
}

TEST_CASE("representation property D(XY) = D(X) D(Y)") {
  std::mt19937_64 rng(5);
  for (int tj = 0; tj <= 5; ++tj) {
    Mat2 x = rand_mat2(rng, 0.8), y = rand_mat2(rng, 0.8);
    WignerMatrix lhs = wigner_d(SpinLabel(tj), x * y);
    WignerMatrix rhs =
        wig_mul(wigner_d(SpinLabel(tj), x), wigner_d(SpinLabel(tj), y));
    CHECK(wig_dist(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("unitarity on the unitary group") {
  std::mt19937_64 rng(7);
  for (int tj = 1; tj <= 4; ++tj) {
    Mat2 u = rand_unitary2(rng);
    WignerMatrix w = wigner_d(SpinLabel(tj), u);
    int d = w.j.dim();
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        cplx s = 0.0;
        for (int k = 0; k < d; ++k)
          s += std::conj(w.entries[k * d + r]) * w.entries[k * d + c];
        CHECK(std::abs(s - (r == c ? 1.0 : 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("character of a diagonal matrix is the Chebyshev sum") {
  // diag(t, 1/t) has character t^{2j} + t^{2j-2} + ... + t^{-2j}.
  cplx t(0.8, 0.3);
  for (int tj = 0; tj <= 5; ++tj) {
    Mat2 x(t, 0.0, 0.0, 1.0 / t);
    cplx expect = 0.0;
    for (int k = -tj; k <= tj; k += 2) expect += std::pow(t, k);
    CHECK(std::abs(wigner_character(SpinLabel(tj), x) - expect) < 1e-12);
  }
}

TEST_CASE("determinant scaling D(cX) = c^{2j} D(X)") {
  std::mt19937_64 rng(11);
  Mat2 x = rand_mat2(rng, 1.0);
  cplx c(0.4, -0.9);
  for (int tj = 0; tj <= 4; ++tj) {
    WignerMatrix lhs = wigner_d(SpinLabel(tj), c * x);
    WignerMatrix rhs = wigner_d(SpinLabel(tj), x);
    cplx f = std::pow(c, tj);
    for (size_t i = 0; i < lhs.entries.size(); ++i)
      CHECK(std::abs(lhs.entries[i] - f * rhs.entries[i]) < 1e-12);
  }
}

TEST_CASE("entry polynomials reproduce the numeric matrix") {
  std::mt19937_64 rng(13);
  Mat2 x = rand_mat2(rng, 0.9);
  std::array<cplx, 4> entries{x.e[0], x.e[1], x.e[2], x.e[3]};
  for (int tj = 0; tj <= 4; ++tj) {
    WignerMatrix w = wigner_d(SpinLabel(tj), x);
    for (int tqa = -tj; tqa <= tj; tqa += 2)
      for (int tqb = -tj; tqb <= tj; tqb += 2) {
        Polynomial p = wigner_entry_poly(tj, tqa, tqb);
        CHECK(std::abs(p.evaluate(entries) - w.at(tqa, tqb)) < 1e-12);
        CHECK(p.degree() <= tj);
      }
  }
}

TEST_CASE("negative spin throws") {
  CHECK_THROWS_AS(SpinLabel(-1), InvalidSpin);
}
