#include "ccs/mat2.hpp"

namespace ccs {

Mat2 Mat2::inverse() const {
  cplx d = det();
  if (std::abs(d) < 1e-300) throw SingularMatrix("2x2 matrix is singular");
  cplx inv = 1.0 / d;
  return {e[3] * inv, -e[1] * inv, -e[2] * inv, e[0] * inv};
}

Mat2 pauli(int mu) {
  const cplx i(0.0, 1.0);
  switch (mu) {
    case 0: return {1.0, 0.0, 0.0, 1.0};
    case 1: return {0.0, 1.0, 1.0, 0.0};
    case 2: return {0.0, -i, i, 0.0};
    case 3: return {1.0, 0.0, 0.0, -1.0};
  }
  throw InvalidIndex("pauli index out of range");
}

Mat2 pauli_lower(int mu) { return eta(mu, mu) * pauli(mu); }

std::array<double, 2> hermitian_eigenvalues(const Mat2& h) {
  double a = h.e[0].real();
  double d = h.e[3].real();
  double off = std::abs(h.e[1]);
  double mid = 0.5 * (a + d);
  double rad = std::hypot(0.5 * (a - d), off);
  return {mid - rad, mid + rad};
}

Mat2 hermitian_pd_power(const Mat2& h, double p, double eps) {
  double a = h.e[0].real();
  double d = h.e[3].real();
  cplx b = h.e[1];
  auto ev = hermitian_eigenvalues(h);
  if (ev[0] < eps)
    throw DomainViolation("matrix power requires positive-definite argument");
  double f0 = std::pow(ev[0], p);
  double f1 = std::pow(ev[1], p);
  if (std::abs(b) < 1e-15 * (std::abs(a) + std::abs(d) + 1.0)) {
    // Already diagonal; avoid the degenerate eigenvector branch.
    return {a >= d ? cplx(f1) : cplx(f0), 0.0, 0.0, a >= d ? cplx(f0) : cplx(f1)};
  }
  // Unit eigenvector for ev[1]: (b, ev[1]-a) normalized.
  cplx v0 = b;
  cplx v1 = ev[1] - a;
  double n = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= n;
  v1 /= n;
  // The other eigenvector is (-conj(v1), conj(v0)).
  Mat2 out;
  out(0, 0) = f1 * std::norm(v0) + f0 * std::norm(v1);
  out(0, 1) = f1 * v0 * std::conj(v1) - f0 * v0 * std::conj(v1);
  out(1, 0) = std::conj(out(0, 1));
  out(1, 1) = f1 * std::norm(v1) + f0 * std::norm(v0);
  return out;
}

double spectral_norm(const Mat2& z) {
  auto ev = hermitian_eigenvalues(z.adjoint() * z);
  return std::sqrt(std::max(0.0, ev[1]));
}

std::array<cplx, 4> z_coords(const Mat2& z) {
  const cplx i(0.0, 1.0);
  return {0.5 * (z.e[0] + z.e[3]), 0.5 * (z.e[1] + z.e[2]),
          0.5 * i * (z.e[1] - z.e[2]), 0.5 * (z.e[0] - z.e[3])};
}

Mat2 from_z_coords(const std::array<cplx, 4>& zmu) {
  const cplx i(0.0, 1.0);
  return {zmu[0] + zmu[3], zmu[1] - i * zmu[2], zmu[1] + i * zmu[2],
          zmu[0] - zmu[3]};
}

}  // namespace ccs
