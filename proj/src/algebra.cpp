#include "ccs/algebra.hpp"

#include <cmath>

namespace ccs {

Mat4 gamma(int mu) {
  return Mat4::from_blocks(Mat2::zero(), pauli(mu), pauli_lower(mu),
                           Mat2::zero());
}

Mat4 gamma5() {
  return Mat4::from_blocks(-Mat2::identity(), Mat2::zero(), Mat2::zero(),
                           Mat2::identity());
}

static ConformalGenerators build_generators() {
  ConformalGenerators g;
  g.dil = 0.5 * gamma5();
  g.unit = Mat4::identity();
  for (int mu = 0; mu < 4; ++mu) {
    g.momentum[mu] = Mat4::from_blocks(Mat2::zero(), pauli(mu), Mat2::zero(),
                                       Mat2::zero());
    g.accel[mu] = Mat4::from_blocks(Mat2::zero(), Mat2::zero(),
                                    pauli_lower(mu), Mat2::zero());
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Mat2 up = 0.25 * (pauli(mu) * pauli_lower(nu) - pauli(nu) * pauli_lower(mu));
      Mat2 lo = 0.25 * (pauli_lower(mu) * pauli(nu) - pauli_lower(nu) * pauli(mu));
      g.boost[mu][nu] = Mat4::from_blocks(up, Mat2::zero(), Mat2::zero(), lo);
    }
  return g;
}

const ConformalGenerators& conformal_generators() {
  static const ConformalGenerators g = build_generators();
  return g;
}

std::vector<Mat4> ConformalGenerators::as_list() const {
  std::vector<Mat4> out;
  out.push_back(dil);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) out.push_back(boost[mu][nu]);
  for (int mu = 0; mu < 4; ++mu) out.push_back(momentum[mu]);
  for (int mu = 0; mu < 4; ++mu) out.push_back(accel[mu]);
  out.push_back(unit);
  return out;
}

std::vector<std::string> ConformalGenerators::names() {
  std::vector<std::string> out{"D"};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      out.push_back("M" + std::to_string(mu) + std::to_string(nu));
  for (int mu = 0; mu < 4; ++mu) out.push_back("P" + std::to_string(mu));
  for (int mu = 0; mu < 4; ++mu) out.push_back("K" + std::to_string(mu));
  out.push_back("I4");
  return out;
}

bool in_cartan_domain(const Mat2& z, double margin) {
  Mat2 h = Mat2::identity() - z.adjoint() * z;
  auto ev = hermitian_eigenvalues(h);
  return ev[0] > margin;
}

CartanPoint::CartanPoint(const Mat2& z, double margin) : Z(z) {
  if (!in_cartan_domain(z, margin))
    throw DomainViolation("point is not inside the Cartan-Bergman domain");
}

TubePoint::TubePoint(const Mat2& w) : W(w) {
  auto ev = hermitian_eigenvalues(imag_part());
  if (ev[0] <= 0.0)
    throw DomainViolation("tube point requires positive-definite Y");
}

Mat2 TubePoint::imag_part() const {
  const cplx two_i(0.0, 2.0);
  Mat2 y = W - W.adjoint();
  return (1.0 / two_i) * y;
}

GroupElement GroupElement::from_matrix(const Mat4& g, double tol) {
  GroupElement out{g.block(0, 0), g.block(0, 1), g.block(1, 0), g.block(1, 1)};
  if (out.pseudo_unitarity_residual() > tol)
    throw DomainViolation("matrix does not satisfy g^dag gamma5 g = gamma5");
  return out;
}

double GroupElement::pseudo_unitarity_residual() const {
  Mat4 g = matrix();
  Mat4 r = g.adjoint() * gamma5() * g - gamma5();
  return r.max_abs();
}

double GroupElement::unit_det_residual() const {
  return std::abs(std::abs(matrix().det()) - 1.0);
}

GroupElement make_group_element(const CartanPoint& z) {
  const Mat2& Z = z.Z;
  Mat2 d1 = hermitian_pd_power(Mat2::identity() - Z * Z.adjoint(), -0.5);
  Mat2 d2 = hermitian_pd_power(Mat2::identity() - Z.adjoint() * Z, -0.5);
  return {d1, Z * d2, Z.adjoint() * d1, d2};
}

GroupElement block_diag_element(const Mat2& v1, const Mat2& v2) {
  return {v1, Mat2::zero(), Mat2::zero(), v2};
}

GroupElement group_multiply(const GroupElement& g1, const GroupElement& g2) {
  Mat4 m = g1.matrix() * g2.matrix();
  return {m.block(0, 0), m.block(0, 1), m.block(1, 0), m.block(1, 1)};
}

TubePoint cayley(const CartanPoint& z) {
  const cplx i(0.0, 1.0);
  Mat2 one = Mat2::identity();
  Mat2 denom = one + z.Z;
  if (std::abs(denom.det()) < 1e-14)
    throw SingularMatrix("sigma^0 + Z is not invertible");
  return TubePoint(i * (one - z.Z) * denom.inverse());
}

CartanPoint cayley_inverse(const TubePoint& w) {
  const cplx i(0.0, 1.0);
  Mat2 one = Mat2::identity();
  Mat2 denom = one - i * w.W;
  if (std::abs(denom.det()) < 1e-14)
    throw SingularMatrix("sigma^0 - iW is not invertible");
  return CartanPoint(denom.inverse() * (one + i * w.W));
}

Mat4 tube_realization(const GroupElement& g) {
  const double s = 1.0 / std::sqrt(2.0);
  Mat2 one = Mat2::identity();
  Mat4 ups = Mat4::from_blocks(s * one, -s * one, s * one, s * one);
  Mat4 ups_inv = Mat4::from_blocks(s * one, s * one, -s * one, s * one);
  return ups * g.matrix() * ups_inv;
}

IwasawaFactors iwasawa(const GroupElement& g) {
  if (std::abs(g.D.det()) < 1e-14)
    throw SingularMatrix("Iwasawa decomposition needs an invertible D block");
  Mat2 Z = g.B * g.D.inverse();
  CartanPoint zp(Z);
  Mat2 d1 = hermitian_pd_power(Mat2::identity() - Z * Z.adjoint(), 0.5);
  Mat2 d2 = hermitian_pd_power(Mat2::identity() - Z.adjoint() * Z, 0.5);
  return {zp, d1 * g.A, d2 * g.D};
}

double measure_density_invariant(const CartanPoint& z) {
  Mat2 h = Mat2::identity() - z.Z.adjoint() * z.Z;
  return std::pow(h.det().real(), -4.0);
}

double measure_normalization(int lambda) {
  if (lambda <= 3)
    throw InvalidScaleDimension("normalized measure requires lambda > 3");
  double l = lambda;
  return (l - 1.0) * (l - 2.0) * (l - 2.0) * (l - 3.0) / std::pow(pi, 4.0);
}

double measure_density_lambda(const CartanPoint& z, int lambda) {
  double c = measure_normalization(lambda);
  Mat2 h = Mat2::identity() - z.Z.adjoint() * z.Z;
  return c * std::pow(h.det().real(), lambda - 4.0);
}

}  // namespace ccs
