#include "ccs/mat4.hpp"

namespace ccs {

Mat4 Mat4::from_blocks(const Mat2& a, const Mat2& b, const Mat2& c,
                       const Mat2& d) {
  Mat4 m;
  for (int r = 0; r < 2; ++r)
    for (int cc = 0; cc < 2; ++cc) {
      m(r, cc) = a(r, cc);
      m(r, cc + 2) = b(r, cc);
      m(r + 2, cc) = c(r, cc);
      m(r + 2, cc + 2) = d(r, cc);
    }
  return m;
}

Mat2 Mat4::block(int r, int c) const {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = (*this)(2 * r + i, 2 * c + j);
  return m;
}

cplx Mat4::det() const {
  // Gaussian elimination with partial pivoting.
  std::array<cplx, 16> a = e;
  cplx d = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[4 * r + col]) > std::abs(a[4 * piv + col])) piv = r;
    if (std::abs(a[4 * piv + col]) == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < 4; ++c) std::swap(a[4 * piv + c], a[4 * col + c]);
      d = -d;
    }
    d *= a[4 * col + col];
    for (int r = col + 1; r < 4; ++r) {
      cplx f = a[4 * r + col] / a[4 * col + col];
      for (int c = col; c < 4; ++c) a[4 * r + c] -= f * a[4 * col + c];
    }
  }
  return d;
}

}  // namespace ccs
