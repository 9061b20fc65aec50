#ifndef CCS_MAT4_HPP
#define CCS_MAT4_HPP

#include <array>

#include "ccs/mat2.hpp"

namespace ccs {

/// Dense 4x4 complex matrix used for group elements and Lie algebra
/// generators in the Weyl basis.
struct Mat4 {
  std::array<cplx, 16> e{};

  cplx& operator()(int r, int c) { return e[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[4 * r + c]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat4 from_blocks(const Mat2& a, const Mat2& b, const Mat2& c,
                          const Mat2& d);

  Mat2 block(int r, int c) const;  // r,c in {0,1}

  Mat4 adjoint() const {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }
  cplx trace() const { return e[0] + e[5] + e[10] + e[15]; }
  cplx det() const;

  friend Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e[i] = x.e[i] + y.e[i];
    return m;
  }
  friend Mat4 operator-(const Mat4& x, const Mat4& y) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e[i] = x.e[i] - y.e[i];
    return m;
  }
  friend Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        cplx s = 0.0;
        for (int k = 0; k < 4; ++k) s += x(r, k) * y(k, c);
        m(r, c) = s;
      }
    return m;
  }
  friend Mat4 operator*(cplx s, const Mat4& x) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.e[i] = s * x.e[i];
    return m;
  }

  double max_abs() const {
    double mx = 0.0;
    for (const auto& v : e) mx = std::max(mx, std::abs(v));
    return mx;
  }
};

inline Mat4 commutator(const Mat4& x, const Mat4& y) { return x * y - y * x; }

}  // namespace ccs

#endif
