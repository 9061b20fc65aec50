#include "ccs/wigner.hpp"

#include <algorithm>

#include "ccs/intmath.hpp"

namespace ccs {

Mat2 WignerMatrix::as_mat2() const {
  if (j.two_j != 1) throw InvalidSpin("as_mat2 requires j = 1/2");
  return {entries[0], entries[1], entries[2], entries[3]};
}

namespace {

struct EntryTerm {
  long e11, e12, e21, e22;
  double coeff;
};

// Terms of one D^j entry: prefactor * sum_k binom * x11^k x12^{ja-k}
// x21^{jb-k} x22^{k-qa-qb}, with ja = j+qa, jb = j+qb.
std::vector<EntryTerm> entry_terms(int two_j, int two_qa, int two_qb) {
  if (std::abs(two_qa) > two_j || std::abs(two_qb) > two_j ||
      ((two_j - two_qa) | (two_j - two_qb)) % 2 != 0)
    throw InvalidSpin("q labels must have the parity and range of j");
  long ja = (two_j + two_qa) / 2;  // j+qa
  long jb = (two_j + two_qb) / 2;  // j+qb
  long ma = (two_j - two_qa) / 2;  // j-qa
  long mb = (two_j - two_qb) / 2;  // j-qb
  long qq = (two_qa + two_qb) / 2; // qa+qb
  double pref = sqrt_factorial_ratio(ja, jb, ma, mb);
  std::vector<EntryTerm> out;
  for (long k = std::max(0L, qq); k <= std::min(ja, jb); ++k) {
    double b = mpz_class(binomial(jb, k) * binomial(mb, k - qq)).get_d();
    if (b == 0.0) continue;
    out.push_back({k, ja - k, jb - k, k - qq, pref * b});
  }
  return out;
}

}  // namespace

WignerMatrix wigner_d(SpinLabel j, const Mat2& x) {
  WignerMatrix d(j);
  int tj = j.two_j;
  // Powers of the four entries up to 2j.
  std::array<std::vector<cplx>, 4> pw;
  for (int v = 0; v < 4; ++v) {
    pw[v].resize(tj + 1);
    pw[v][0] = 1.0;
    for (int k = 1; k <= tj; ++k) pw[v][k] = pw[v][k - 1] * x.e[v];
  }
  for (int tqa = tj; tqa >= -tj; tqa -= 2)
    for (int tqb = tj; tqb >= -tj; tqb -= 2) {
      cplx sum = 0.0;
      for (const auto& t : entry_terms(tj, tqa, tqb))
        sum += t.coeff * pw[0][t.e11] * pw[1][t.e12] * pw[2][t.e21] * pw[3][t.e22];
      d.at(tqa, tqb) = sum;
    }
  return d;
}

cplx wigner_character(SpinLabel j, const Mat2& x) {
  WignerMatrix d = wigner_d(j, x);
  cplx tr = 0.0;
  for (int tq = j.two_j; tq >= -j.two_j; tq -= 2) tr += d.at(tq, tq);
  return tr;
}

Polynomial wigner_entry_poly(int two_j, int two_qa, int two_qb) {
  Polynomial p;
  for (const auto& t : entry_terms(two_j, two_qa, two_qb))
    p.add_term({static_cast<int>(t.e11), static_cast<int>(t.e12),
                static_cast<int>(t.e21), static_cast<int>(t.e22)},
               t.coeff);
  return p;
}

}  // namespace ccs
