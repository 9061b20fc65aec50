#ifndef CCS_MAT2_HPP
#define CCS_MAT2_HPP

#include <array>
#include <cmath>

#include "ccs/core.hpp"

namespace ccs {

/// Dense 2x2 complex matrix, the carrier type for domain points Z,
/// unitary fibers U and the positive blocks Delta.
struct Mat2 {
  std::array<cplx, 4> e{};  // row-major: e[2*r+c]

  Mat2() = default;
  Mat2(cplx a, cplx b, cplx c, cplx d) : e{a, b, c, d} {}

  cplx& operator()(int r, int c) { return e[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[2 * r + c]; }

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }

  Mat2 adjoint() const {
    return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
  }
  Mat2 transpose() const { return {e[0], e[2], e[1], e[3]}; }
  Mat2 conjugate() const {
    return {std::conj(e[0]), std::conj(e[1]), std::conj(e[2]), std::conj(e[3])};
  }
  cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
  cplx trace() const { return e[0] + e[3]; }

  Mat2 inverse() const;  // throws SingularMatrix

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]};
  }
  friend Mat2 operator-(const Mat2& x) {
    return {-x.e[0], -x.e[1], -x.e[2], -x.e[3]};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
            x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]};
  }
  friend Mat2 operator*(cplx s, const Mat2& x) {
    return {s * x.e[0], s * x.e[1], s * x.e[2], s * x.e[3]};
  }
  friend Mat2 operator*(const Mat2& x, cplx s) { return s * x; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : e) m = std::max(m, std::abs(v));
    return m;
  }
};

/// sigma^mu: identity plus the three Pauli matrices.
Mat2 pauli(int mu);
/// sigma_mu = eta_{mu nu} sigma^nu (the "checked" sigma).
Mat2 pauli_lower(int mu);

/// Eigenvalues of a hermitian 2x2 matrix, ascending.
std::array<double, 2> hermitian_eigenvalues(const Mat2& h);

/// Principal power h^p of a hermitian positive-definite matrix via its
/// eigendecomposition. Throws DomainViolation if an eigenvalue is below eps.
Mat2 hermitian_pd_power(const Mat2& h, double p, double eps = 1e-13);

/// Spectral (operator) norm.
double spectral_norm(const Mat2& z);

/// Coordinates z_mu with Z = z_mu sigma^mu:
///   z11 = z0+z3, z22 = z0-z3, z12 = z1-i z2, z21 = z1+i z2.
std::array<cplx, 4> z_coords(const Mat2& z);
Mat2 from_z_coords(const std::array<cplx, 4>& zmu);

}  // namespace ccs

#endif
