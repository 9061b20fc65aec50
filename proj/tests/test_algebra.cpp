#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccs/algebra.hpp"

using namespace ccs;

namespace {

double dist(const Mat4& x, const Mat4& y) { return (x - y).max_abs(); }

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

}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford relations") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Mat4 anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      CHECK(dist(anti, (2.0 * eta(mu, nu)) * Mat4::identity()) < 1e-14);
    }
}

TEST_CASE("gamma5 squares to one and anticommutes with gamma") {
  CHECK(dist(gamma5() * gamma5(), Mat4::identity()) < 1e-14);
  for (int mu = 0; mu < 4; ++mu)
    CHECK((gamma5() * gamma(mu) + gamma(mu) * gamma5()).max_abs() < 1e-14);
}

TEST_CASE("conformal commutation relations") {
  const auto& g = conformal_generators();
  SUBCASE("dilations grade P and K") {
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(dist(commutator(g.dil, g.momentum[mu]), -1.0 * g.momentum[mu]) <
            1e-14);
      CHECK(dist(commutator(g.dil, g.accel[mu]), g.accel[mu]) < 1e-14);
    }
  }
  SUBCASE("translations commute") {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        CHECK(commutator(g.momentum[mu], g.momentum[nu]).max_abs() < 1e-14);
        CHECK(commutator(g.accel[mu], g.accel[nu]).max_abs() < 1e-14);
      }
  }
  SUBCASE("[K_mu, P_nu] = 2(eta D + M)") {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Mat4 lhs = commutator(eta(mu, mu) * g.accel[mu],
                              eta(nu, nu) * g.momentum[nu]);
        Mat4 rhs = (2.0 * eta(mu, nu)) * g.dil;
        if (mu != nu)
          rhs = rhs + (2.0 * eta(mu, mu) * eta(nu, nu)) * g.boost[mu][nu];
        CHECK(dist(lhs, rhs) < 1e-13);
      }
  }
  SUBCASE("boosts rotate vectors") {
    // [M^{mu nu}, P^rho] = eta^{nu rho} P^mu - eta^{mu rho} P^nu
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        if (mu == nu) continue;
        for (int rho = 0; rho < 4; ++rho) {
          Mat4 lhs = commutator(g.boost[mu][nu], g.momentum[rho]);
          Mat4 rhs = eta(nu, rho) * g.momentum[mu] -
                     eta(mu, rho) * g.momentum[nu];
          CHECK(dist(lhs, rhs) < 1e-13);
        }
      }
  }
}

TEST_CASE("adjoint pairing of the generators") {
  // Hermiticity w.r.t. the invariant form: D and the M^{0j} are
  // self-adjoint, the rotations M^{ij} anti-self-adjoint, and the root
  // vectors pair as (P^mu)^dag = K_mu.
  const auto& g = conformal_generators();
  CHECK(dist(g.dil.adjoint(), g.dil) < 1e-14);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(dist(g.momentum[mu].adjoint(), eta(mu, mu) * g.accel[mu]) < 1e-14);
  for (int j = 1; j < 4; ++j)
    CHECK(dist(g.boost[0][j].adjoint(), g.boost[0][j]) < 1e-14);
  for (int i = 1; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(dist(g.boost[i][j].adjoint(), -1.0 * g.boost[i][j]) < 1e-14);
}

TEST_CASE("coset representative is pseudo-unitary") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10; ++k) {
    CartanPoint z(rand_mat2(rng, 0.3));
    GroupElement g = make_group_element(z);
    CHECK(g.pseudo_unitarity_residual() < 1e-12);
  }
}

TEST_CASE("iwasawa recovers the coset point") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    CartanPoint z(rand_mat2(rng, 0.3));
    GroupElement g = group_multiply(
        make_group_element(z),
        block_diag_element(rand_unitary2(rng), rand_unitary2(rng)));
    IwasawaFactors f = iwasawa(g);
    CHECK((f.Z.Z - z.Z).max_abs() < 1e-10);
    GroupElement back = group_multiply(make_group_element(f.Z),
                                       block_diag_element(f.U1, f.U2));
    CHECK((back.matrix() - g.matrix()).max_abs() < 1e-10);
  }
}

TEST_CASE("cayley map is an involution pair") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    CartanPoint z(rand_mat2(rng, 0.3));
    TubePoint w = cayley(z);
    CHECK(hermitian_eigenvalues(w.imag_part())[0] > 0.0);
    CartanPoint back = cayley_inverse(w);
    CHECK((back.Z - z.Z).max_abs() < 1e-12);
  }
}

TEST_CASE("domain membership") {
  CHECK(in_cartan_domain(Mat2::zero()));
  CHECK(in_cartan_domain(Mat2(0.7, 0, 0, 0.7)));
  CHECK(!in_cartan_domain(Mat2::identity()));
  CHECK(!in_cartan_domain(Mat2(1.2, 0, 0, 0.1)));
  CHECK_THROWS_AS(CartanPoint(Mat2::identity()), DomainViolation);
}

TEST_CASE("measure normalization") {
  CHECK(measure_normalization(4) ==
        doctest::Approx(12.0 / (pi * pi * pi * pi)).epsilon(1e-14));
  CHECK(measure_normalization(5) ==
        doctest::Approx(4.0 * 9.0 * 2.0 / (pi * pi * pi * pi)).epsilon(1e-14));
  CHECK_THROWS_AS(measure_normalization(3), InvalidScaleDimension);
  CartanPoint z0;
  CHECK(measure_density_lambda(z0, 4) ==
        doctest::Approx(measure_normalization(4)).epsilon(1e-14));
}

TEST_CASE("tube realization preserves the group law") {
  std::mt19937_64 rng(17);
  GroupElement g1 = make_group_element(CartanPoint(rand_mat2(rng, 0.25)));
  GroupElement g2 = make_group_element(CartanPoint(rand_mat2(rng, 0.25)));
  Mat4 lhs = tube_realization(group_multiply(g1, g2));
  Mat4 rhs = tube_realization(g1) * tube_realization(g2);
  CHECK(dist(lhs, rhs) < 1e-10);
}
