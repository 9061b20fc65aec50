#ifndef CCS_WIGNER_HPP
#define CCS_WIGNER_HPP

#include <vector>

#include "ccs/mat2.hpp"
#include "ccs/polynomial.hpp"

namespace ccs {

/// Half-integer spin stored as 2j.
struct SpinLabel {
  int two_j = 0;

  explicit SpinLabel(int tj) : two_j(tj) {
    if (tj < 0) throw InvalidSpin("spin label requires 2j >= 0");
  }
  int dim() const { return two_j + 1; }
};

/// (2j+1)x(2j+1) matrix of D^j entries, rows/columns ordered
/// q = j, j-1, ..., -j.
struct WignerMatrix {
  SpinLabel j;
  std::vector<cplx> entries;  // row-major

  explicit WignerMatrix(SpinLabel s) : j(s), entries(s.dim() * s.dim(), 0.0) {}

  /// Access by two_q values (even/odd with two_j parity).
  cplx& at(int two_qa, int two_qb) {
    return entries[row(two_qa) * j.dim() + row(two_qb)];
  }
  cplx at(int two_qa, int two_qb) const {
    return entries[row(two_qa) * j.dim() + row(two_qb)];
  }
  int row(int two_q) const { return (j.two_j - two_q) / 2; }

  Mat2 as_mat2() const;  // only for j = 1/2
};

/// D^j(X) for an arbitrary complex 2x2 matrix X, by the explicit finite
/// sum over k with exact integer binomials.
WignerMatrix wigner_d(SpinLabel j, const Mat2& x);

/// Trace of D^j(X).
cplx wigner_character(SpinLabel j, const Mat2& x);

/// One entry of D^j as a polynomial in the matrix entries
/// (variable order z11, z12, z21, z22).
Polynomial wigner_entry_poly(int two_j, int two_qa, int two_qb);

}  // namespace ccs

#endif
