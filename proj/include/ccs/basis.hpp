#ifndef CCS_BASIS_HPP
#define CCS_BASIS_HPP

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "ccs/algebra.hpp"
#include "ccs/polynomial.hpp"
#include "ccs/wigner.hpp"

namespace ccs {

/// Label (lambda; j, m, q_a, q_b) of one basis polynomial. Half-integers
/// are stored doubled.
struct BasisIndex {
  int lambda = 4;
  int two_j = 0;
  int m = 0;
  int two_qa = 0;
  int two_qb = 0;

  int degree() const { return two_j + 2 * m; }

  /// Throws unless the labels form a valid index. Kernel/polynomial
  /// identities need lambda >= 2; normalized-measure work needs
  /// lambda >= 4 (pass min_lambda accordingly).
  void validate(int min_lambda = 2) const;

  /// True iff the labels are in range (no throw); used to drop
  /// out-of-lattice targets of the ladder formulas.
  bool in_lattice() const;

  auto operator<=>(const BasisIndex&) const = default;
};

/// All indices with homogeneity degree <= max_degree, ordered by degree.
std::vector<BasisIndex> enumerate_basis(int lambda, int max_degree);

/// sqrt((2j+1)/(lambda-1) * C(m+l-2, l-2) * C(m+2j+l-1, l-2)).
double basis_prefactor(const BasisIndex& idx);

/// The basis polynomial in the z_mu variables.
Polynomial basis_poly(const BasisIndex& idx);

/// Numeric evaluation without expanding the polynomial.
cplx basis_eval(const BasisIndex& idx, const Mat2& z);

/// Caches Wigner matrices and det powers at a fixed point so that whole
/// degree blocks can be evaluated cheaply.
class BasisEvaluator {
 public:
  BasisEvaluator(const Mat2& z, int max_degree);
  cplx eval(const BasisIndex& idx) const;

 private:
  std::vector<WignerMatrix> wig_;
  std::vector<cplx> det_pow_;
};

/// det(sigma^0 - Z^dag Z')^{-lambda}.
cplx bergman_kernel(const CartanPoint& z, const CartanPoint& zp, int lambda);

/// Partial sum of the kernel expansion over degrees <= max_degree,
/// collapsed over q via Wigner characters.
cplx kernel_partial_sum(const CartanPoint& z, const CartanPoint& zp, int lambda,
                        int max_degree);

/// Same partial sum evaluated term by term from the basis polynomials;
/// the slow independent route kept for cross-checking.
cplx kernel_partial_sum_direct(const CartanPoint& z, const CartanPoint& zp,
                               int lambda, int max_degree);

/// Coherent state overlap det(1-Z^dag Z)^{l/2} det(1-Z'^dag Z')^{l/2}
/// det(1-Z^dag Z')^{-l}; same cross term as bergman_kernel(z, zp).
cplx cs_overlap(const CartanPoint& z, const CartanPoint& zp, int lambda);

/// Coefficients of p over the basis polynomials (exact linear solve per
/// homogeneous degree block). Throws DomainViolation if the residual of
/// the solve exceeds 1e-9 (cannot happen for genuine polynomials).
std::map<BasisIndex, cplx> expand_in_basis(const Polynomial& p, int lambda);

using PointEvaluator = std::function<cplx(const Mat2&)>;

/// [U_g phi](Z) = det(D'^dag - B'^dag Z)^{-lambda} phi(Z'),
/// Z' = (A'^dag Z - C'^dag)(D'^dag - B'^dag Z)^{-1}.
cplx rep_action_eval(const GroupElement& g, const PointEvaluator& phi,
                     int lambda, const Mat2& z);

/// Transformed argument Z' of the action above.
Mat2 rep_action_argument(const GroupElement& g, const Mat2& z);

/// Expansion coefficients of [U_g 1] over basis polynomials of degree
/// <= max_degree: c_idx = det(D'^dag)^{-lambda} conj(phi_idx(B' D'^{-1})).
std::map<BasisIndex, cplx> rep_action_coeffs(const GroupElement& g, int lambda,
                                             int max_degree);

/// Integer powers of a complex scalar, exact for negative exponents too.
cplx int_pow(cplx base, int n);

// ---- scalar U(1,1) analogue on the unit disk ----

struct DiskIndex {
  double kappa = 1.0;
  int n = 0;

  void validate() const;
};

/// sqrt(C(2k+n-1, n)), the coefficient of z^n in the disk basis.
double disk_basis_coeff(double kappa, int n);

/// <z'|z> on the disk.
cplx disk_overlap(cplx z, cplx zp, double kappa);

/// Partial sum of the disk kernel (1 - conj(z) z')^{-2k} up to degree N.
cplx disk_partial_kernel(cplx z, cplx zp, double kappa, int max_degree);

/// (2k-1)/pi * int |phi_n|^2 (1-|z|^2)^{2k-2} |dz| by radial Gauss +
/// angular trapezoid; equals 1 exactly.
double disk_identity_quadrature(double kappa, int n, int radial_nodes = 64,
                                int angular_nodes = 64);

}  // namespace ccs

#endif
