#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccs/basis.hpp"

using namespace ccs;

namespace {

Mat2 rand_interior(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Mat2 z;
  for (auto& e : z.e) {
    double r = scale * std::sqrt(u(rng)), t = 2.0 * pi * u(rng);
    e = cplx(r * std::cos(t), r * std::sin(t));
  }
  return z;
}

}  // namespace

TEST_CASE("degree blocks have binomial dimension") {
  // # of indices at homogeneity n is C(n+3, 3).
  auto basis = enumerate_basis(4, 6);
  std::map<int, int> count;
  for (const auto& idx : basis) ++count[idx.degree()];
  for (int n = 0; n <= 6; ++n)
    CHECK(count[n] == (n + 1) * (n + 2) * (n + 3) / 6);
  for (size_t i = 1; i < basis.size(); ++i)
    CHECK(basis[i - 1].degree() <= basis[i].degree());
}

TEST_CASE("index validation") {
  BasisIndex bad{4, 1, 0, 1, 3};  // |q_b| > j
  CHECK(!bad.in_lattice());
  CHECK_THROWS_AS(bad.validate(), InvalidIndex);
  BasisIndex parity{4, 1, 0, 0, 1};  // q_a parity off
  CHECK(!parity.in_lattice());
  BasisIndex low{3, 0, 0, 0, 0};
  CHECK_NOTHROW(low.validate(2));
  CHECK_THROWS_AS(low.validate(4), InvalidScaleDimension);
}

TEST_CASE("basis_eval matches the expanded polynomial") {
  std::mt19937_64 rng(3);
  Mat2 z = rand_interior(rng, 0.5);
  for (const auto& idx : enumerate_basis(5, 4)) {
    cplx direct = basis_eval(idx, z);
    cplx via_poly = evaluate_at_matrix(basis_poly(idx), z);
    CHECK(std::abs(direct - via_poly) < 1e-12);
  }
}

TEST_CASE("evaluator agrees with basis_eval") {
  std::mt19937_64 rng(5);
  Mat2 z = rand_interior(rng, 0.5);
  BasisEvaluator ev(z, 5);
  for (const auto& idx : enumerate_basis(4, 5))
    CHECK(std::abs(ev.eval(idx) - basis_eval(idx, z)) < 1e-13);
}

TEST_CASE("kernel partial sums converge to the Bergman kernel") {
  std::mt19937_64 rng(7);
  for (int lambda : {2, 3, 4, 5}) {
    CartanPoint z(rand_interior(rng, 0.35));
    CartanPoint zp(rand_interior(rng, 0.35));
    cplx exact = bergman_kernel(z, zp, lambda);
    cplx sum = kernel_partial_sum(z, zp, lambda, 40);
    CHECK(std::abs(sum - exact) < 1e-9);
    // the slow per-term route matches the character-collapsed one
    cplx direct = kernel_partial_sum_direct(z, zp, lambda, 8);
    CHECK(std::abs(direct - kernel_partial_sum(z, zp, lambda, 8)) < 1e-11);
  }
}

TEST_CASE("coherent state overlap normalizes on the diagonal") {
  std::mt19937_64 rng(9);
  CartanPoint z(rand_interior(rng, 0.4));
  CartanPoint zp(rand_interior(rng, 0.4));
  CHECK(std::abs(cs_overlap(z, z, 4) - 1.0) < 1e-12);
  CHECK(std::abs(cs_overlap(zp, zp, 5) - 1.0) < 1e-12);
  // |<z|z'>| <= 1 with equality only on the diagonal
  CHECK(std::abs(cs_overlap(z, zp, 4)) < 1.0);
  CHECK(std::abs(cs_overlap(z, zp, 4) - std::conj(cs_overlap(zp, z, 4))) <
        1e-12);
}

TEST_CASE("expand_in_basis inverts basis_poly") {
  for (const auto& idx : enumerate_basis(4, 3)) {
    auto coeffs = expand_in_basis(basis_poly(idx), 4);
    for (const auto& [k, c] : coeffs) {
      if (k == idx)
        CHECK(std::abs(c - 1.0) < 1e-11);
      else
        CHECK(std::abs(c) < 1e-11);
    }
  }
  // and a mixed polynomial reassembles
  Polynomial p = basis_poly({5, 1, 1, 1, -1}) * cplx(0.3, 0.7) +
                 basis_poly({5, 2, 0, 0, 2}) * cplx(-1.1, 0.2);
  auto coeffs = expand_in_basis(p, 5);
  Polynomial back;
  for (const auto& [k, c] : coeffs) back += basis_poly(k) * c;
  CHECK(back.max_coeff_distance(p) < 1e-11);
}

TEST_CASE("representation action: coefficients match pointwise action") {
  std::mt19937_64 rng(11);
  CartanPoint w(rand_interior(rng, 0.2));
  GroupElement g = make_group_element(w);
  int lambda = 4, max_degree = 14;
  auto coeffs = rep_action_coeffs(g, lambda, max_degree);
  std::mt19937_64 rng2(13);
  for (int k = 0; k < 3; ++k) {
    Mat2 z = rand_interior(rng2, 0.25);
    PointEvaluator one = [](const Mat2&) { return cplx(1.0); };
    cplx eval = rep_action_eval(g, one, lambda, z);
    BasisEvaluator ev(z, max_degree);
    cplx sum = 0.0;
    for (const auto& [idx, c] : coeffs) sum += c * ev.eval(idx);
    CHECK(std::abs(sum - eval) < 1e-7);
  }
}

TEST_CASE("rep action argument stays in the domain") {
  std::mt19937_64 rng(17);
  GroupElement g = make_group_element(CartanPoint(rand_interior(rng, 0.3)));
  for (int k = 0; k < 5; ++k) {
    Mat2 z = rand_interior(rng, 0.45);
    CHECK(in_cartan_domain(rep_action_argument(g, z)));
  }
}

TEST_CASE("int_pow handles negative exponents") {
  cplx b(0.6, -0.8);
  CHECK(std::abs(int_pow(b, 0) - 1.0) < 1e-15);
  CHECK(std::abs(int_pow(b, 3) - b * b * b) < 1e-14);
  CHECK(std::abs(int_pow(b, -2) - 1.0 / (b * b)) < 1e-14);
}

TEST_CASE("disk basis: quadrature and kernel") {
  for (int tk : {2, 3, 4}) {
    double kappa = 0.5 * tk;
    for (int n = 0; n <= 4; ++n)
      CHECK(std::abs(disk_identity_quadrature(kappa, n) - 1.0) < 1e-8);
    cplx z(0.3, -0.4), zp(-0.2, 0.5);
    CHECK(std::abs(disk_partial_kernel(z, zp, kappa, 200) -
                   std::pow(1.0 - std::conj(z) * zp, -2.0 * kappa)) < 1e-10);
    CHECK(std::abs(disk_overlap(z, z, kappa) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(DiskIndex({0.2, 0}).validate(), InvalidScaleDimension);
}
