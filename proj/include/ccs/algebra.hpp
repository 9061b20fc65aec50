#ifndef CCS_ALGEBRA_HPP
#define CCS_ALGEBRA_HPP

#include <string>
#include <vector>

#include "ccs/mat4.hpp"

namespace ccs {

/// gamma^mu in the Weyl basis: off-diagonal blocks sigma^mu / sigma_mu.
Mat4 gamma(int mu);
/// gamma^5 = i g0 g1 g2 g3 = blockdiag(-sigma^0, sigma^0).
Mat4 gamma5();

/// The sixteen u(2,2) matrix generators: D, M^{mu nu} (mu<nu), P^mu, K^mu
/// and the identity. Order: D, M01, M02, M03, M12, M13, M23, P0..P3,
/// K0..K3, I4.
struct ConformalGenerators {
  Mat4 dil;
  Mat4 boost[4][4];  // M^{mu nu}, antisymmetric, filled for all mu != nu
  Mat4 momentum[4];  // P^mu
  Mat4 accel[4];     // K^mu
  Mat4 unit;

  std::vector<Mat4> as_list() const;
  static std::vector<std::string> names();
};

const ConformalGenerators& conformal_generators();

/// Point on the Cartan-Bergman domain: sigma^0 - Z^dagger Z > 0.
struct CartanPoint {
  Mat2 Z;

  explicit CartanPoint(const Mat2& z, double margin = 0.0);
  CartanPoint() = default;
};

/// True iff both eigenvalues of sigma^0 - Z^dagger Z exceed margin.
bool in_cartan_domain(const Mat2& z, double margin = 0.0);

/// Point on the future tube: W = X + iY with Y = (W - W^dagger)/(2i) > 0.
struct TubePoint {
  Mat2 W;

  explicit TubePoint(const Mat2& w);
  TubePoint() = default;

  Mat2 imag_part() const;
};

/// Block form of g in U(2,2) with g^dagger gamma5 g = gamma5.
struct GroupElement {
  Mat2 A, B, C, D;

  Mat4 matrix() const { return Mat4::from_blocks(A, B, C, D); }
  static GroupElement from_matrix(const Mat4& g, double tol = 1e-10);

  /// max-norm residual of g^dagger gamma5 g - gamma5.
  double pseudo_unitarity_residual() const;
  /// | |det g| - 1 |, the optional unit-determinant check.
  double unit_det_residual() const;
};

/// Coset representative of Z: blocks (D1, Z D2, Z^dag D1, D2) with
/// D1 = (1-ZZ^dag)^{-1/2}, D2 = (1-Z^dag Z)^{-1/2}.
GroupElement make_group_element(const CartanPoint& z);

/// Block-diagonal U(2)^2 element.
GroupElement block_diag_element(const Mat2& v1, const Mat2& v2);

GroupElement group_multiply(const GroupElement& g1, const GroupElement& g2);

/// Cayley map onto the tube and back.
TubePoint cayley(const CartanPoint& z);
CartanPoint cayley_inverse(const TubePoint& w);

/// Conjugation g -> Ups g Ups^{-1} into the gamma^0-preserving realization.
Mat4 tube_realization(const GroupElement& g);

struct IwasawaFactors {
  CartanPoint Z;
  Mat2 U1, U2;
};

/// g = coset(Z) * blockdiag(U1, U2); requires the D block invertible.
IwasawaFactors iwasawa(const GroupElement& g);

/// det(sigma^0 - Z^dag Z)^{-4}, the invariant measure density on the domain.
double measure_density_invariant(const CartanPoint& z);

/// Normalization constant c_lambda = (l-1)(l-2)^2(l-3)/pi^4, lambda >= 4.
double measure_normalization(int lambda);

/// c_lambda det(sigma^0 - Z^dag Z)^{lambda-4}.
double measure_density_lambda(const CartanPoint& z, int lambda);

}  // namespace ccs

#endif
