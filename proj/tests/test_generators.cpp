#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccs/generators.hpp"

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

// Expands G phi_idx over the basis through the differential model; the
// independent oracle for the closed-form rows.
std::map<BasisIndex, cplx> diff_row(const GeneratorName& g,
                                    const BasisIndex& idx) {
  Polynomial p = apply_generator_diff(g, basis_poly(idx), idx.lambda);
  return expand_in_basis(p, idx.lambda);
}

double row_distance(const MatrixElementRow& row,
                    const std::map<BasisIndex, cplx>& oracle) {
  double worst = 0.0;
  std::map<BasisIndex, cplx> want = oracle;
  for (const auto& [tgt, c] : row.targets) {
    auto it = want.find(tgt);
    cplx w = (it == want.end()) ? cplx(0.0) : it->second;
    worst = std::max(worst, std::abs(c - w));
    if (it != want.end()) want.erase(it);
  }
  for (const auto& [tgt, w] : want) worst = std::max(worst, std::abs(w));
  return worst;
}

const std::vector<std::string>& linear_names() {
  static const std::vector<std::string> names = {
      "D",   "P0",  "P1",  "P2",  "P3",  "K0",  "K1",  "K2",  "K3",
      "M01", "M02", "M03", "M12", "M13", "M23", "Sa3", "Sb3", "Sa+",
      "Sa-", "Sb+", "Sb-"};
  return names;
}

}  // namespace

TEST_CASE("closed-form rows match the differential model") {
  for (int lambda : {4, 5}) {
    for (const auto& idx : enumerate_basis(lambda, 4))
      for (const auto& name : linear_names()) {
        GeneratorName g = GeneratorName::parse(name);
        MatrixElementRow row = generator_matrix_elements(g, idx);
        CHECK(row_distance(row, diff_row(g, idx)) < 1e-11);
      }
  }
}

TEST_CASE("generator name round trip") {
  for (const auto& name : linear_names())
    CHECK(GeneratorName::parse(name).str() == name);
  CHECK_THROWS_AS(GeneratorName::parse("Q7"), InvalidIndex);
}

TEST_CASE("[K_mu, P_nu] = 2(eta D + M) on monomials") {
  int lambda = 5;
  std::vector<Polynomial> monos;
  monos.push_back(Polynomial::constant(1.0));
  monos.push_back(Polynomial::monomial({1, 2, 0, 1}, cplx(0.7, -0.3)));
  monos.push_back(Polynomial::monomial({0, 1, 3, 2}, 1.0));
  monos.push_back(Polynomial::monomial({2, 0, 0, 0}, cplx(0.0, 1.0)));
  auto ap = [lambda](const std::string& n, const Polynomial& p) {
    return apply_generator_diff(GeneratorName::parse(n), p, lambda);
  };
  for (const auto& p : monos)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        std::string K = "K" + std::to_string(mu);
        std::string P = "P" + std::to_string(nu);
        // lowered indices on both sides
        double sgn = eta(mu, mu) * eta(nu, nu);
        Polynomial lhs =
            (ap(K, ap(P, p)) - ap(P, ap(K, p))) * sgn;
        Polynomial rhs = ap("D", p) * (2.0 * eta(mu, nu));
        if (mu != nu) {
          std::string M = "M" + std::to_string(std::min(mu, nu)) +
                          std::to_string(std::max(mu, nu));
          double msgn = (mu < nu ? 1.0 : -1.0) * sgn;
          rhs += ap(M, p) * (2.0 * msgn);
        }
        CHECK(lhs.max_coeff_distance(rhs) < 1e-12);
      }
}

TEST_CASE("quadratic rows match composed differential operators") {
  int lambda = 4;
  auto ap = [lambda](const std::string& n, const Polynomial& p) {
    return apply_generator_diff(GeneratorName::parse(n), p, lambda);
  };
  for (const auto& idx : enumerate_basis(lambda, 3)) {
    Polynomial p = basis_poly(idx);
    Polynomial pp, kk, kp, pk, mm;
    for (int mu = 0; mu < 4; ++mu) {
      std::string P = "P" + std::to_string(mu), K = "K" + std::to_string(mu);
      pp += ap(P, ap(P, p)) * eta(mu, mu);
      kk += ap(K, ap(K, p)) * eta(mu, mu);
      kp += ap(K, ap(P, p)) * eta(mu, mu);
      pk += ap(P, ap(K, p)) * eta(mu, mu);
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu) {
        std::string M = "M" + std::to_string(mu) + std::to_string(nu);
        mm += ap(M, ap(M, p)) * (2.0 * eta(mu, mu) * eta(nu, nu));
      }
    Polynomial dd = ap("D", ap("D", p));
    auto check_row = [&](QuadraticName q, const Polynomial& got) {
      MatrixElementRow row = quadratic_action(q, idx);
      Polynomial want;
      for (const auto& [tgt, c] : row.targets) want += basis_poly(tgt) * c;
      CHECK(got.max_coeff_distance(want) < 1e-10);
    };
    check_row(QuadraticName::PP, pp);
    check_row(QuadraticName::KK, kk);
    check_row(QuadraticName::KP, kp);
    check_row(QuadraticName::PK, pk);
    check_row(QuadraticName::MM, mm);
    check_row(QuadraticName::DD, dd);
  }
}

TEST_CASE("casimir equals lambda(lambda-4)") {
  for (int lambda : {4, 5, 6})
    for (const auto& idx : enumerate_basis(lambda, 4))
      CHECK(casimir2(idx) ==
            doctest::Approx(lambda * (lambda - 4.0)).epsilon(1e-12));
}

TEST_CASE("coeff_C rejects j = 0") {
  CHECK_THROWS_AS(coeff_C(0, 1, 0, 0, 4), InvalidSpin);
  CHECK(coeff_C(2, 1, 0, 0, 5) ==
        doctest::Approx(std::sqrt(1.0 * 1.0 * 1.0 * 4.0 / 6.0)).epsilon(1e-13));
}

TEST_CASE("closed-form symbols match the expansion oracle") {
  std::mt19937_64 rng(23);
  int lambda = 4, deg = 32;
  std::vector<std::string> names = {"D",  "P0", "P2", "K1", "K3", "M01",
                                    "M23", "D2", "PP", "KK", "PK", "KP",
                                    "MM"};
  for (int k = 0; k < 3; ++k) {
    CartanPoint z(rand_interior(rng, 0.3));
    for (const auto& name : names)
      CHECK(std::abs(symbol(name, z, lambda) -
                     symbol_expansion_oracle(name, z, lambda, deg)) < 1e-6);
  }
}

TEST_CASE("symbol identities") {
  std::mt19937_64 rng(29);
  for (int lambda : {4, 5}) {
    CartanPoint z(rand_interior(rng, 0.4));
    // <KP> = <PK> + 8 <D> holds exactly
    cplx d = symbol("D", z, lambda);
    CHECK(std::abs(symbol("KP", z, lambda) - symbol("PK", z, lambda) -
                   8.0 * d) < 1e-12);
    // Casimir from symbols: the quadratics assemble to lambda(lambda-4)
    cplx c2 = symbol("D2", z, lambda) - 0.5 * symbol("MM", z, lambda) +
              0.5 * (symbol("PK", z, lambda) + symbol("KP", z, lambda));
    CHECK(std::abs(c2 - lambda * (lambda - 4.0)) < 1e-10);
  }
}

TEST_CASE("star product reproduces the commutator") {
  // [P_0, K_0] = -[K_0, P_0] = -2 D, so the ordered product oracles
  // differ by -2 <D>.
  std::mt19937_64 rng(31);
  CartanPoint z(rand_interior(rng, 0.25));
  int lambda = 4, deg = 28;
  cplx pk = symbol_product_oracle("P0", "K0", z, lambda, deg);
  cplx kp = symbol_product_oracle("K0", "P0", z, lambda, deg);
  CHECK(std::abs((pk - kp) + 2.0 * symbol("D", z, lambda)) < 1e-6);
}
