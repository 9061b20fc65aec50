#ifndef CCS_POLYNOMIAL_HPP
#define CCS_POLYNOMIAL_HPP

#include <array>
#include <map>

#include "ccs/core.hpp"
#include "ccs/mat2.hpp"

namespace ccs {

/// Sparse polynomial in four complex variables. The same carrier is used
/// for the z_mu coordinates (Z = z_mu sigma^mu) and, after a linear
/// substitution, for the matrix entries (z11, z12, z21, z22).
class Polynomial {
 public:
  using Exponents = std::array<int, 4>;
  using TermMap = std::map<Exponents, cplx>;

  static constexpr double coeff_floor = 1e-14;

  Polynomial() = default;
  static Polynomial constant(cplx c);
  static Polynomial variable(int mu);
  static Polynomial monomial(const Exponents& e, cplx c);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int degree() const;
  cplx coeff(const Exponents& e) const;

  Polynomial& add_term(const Exponents& e, cplx c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;
  Polynomial operator-() const { return *this * cplx(-1.0); }
  Polynomial& operator+=(const Polynomial& o);

  /// d/dx_mu.
  Polynomial derivative(int mu) const;

  cplx evaluate(const std::array<cplx, 4>& x) const;

  /// Replace variable mu by sum_nu map[mu][nu] * y_nu.
  Polynomial substitute_linear(const std::array<std::array<cplx, 4>, 4>& map) const;

  Polynomial pow(int n) const;

  double max_abs_coeff() const;
  /// Largest |coefficient| of this - o.
  double max_coeff_distance(const Polynomial& o) const;

  void prune(double tol = coeff_floor);

 private:
  TermMap terms_;
};

/// Conversions between the z_mu coordinates and the matrix-entry basis
/// (variable order z11, z12, z21, z22).
Polynomial z_to_entries(const Polynomial& p);
Polynomial entries_to_z(const Polynomial& p);

/// Evaluate a z_mu polynomial at a matrix point.
cplx evaluate_at_matrix(const Polynomial& p, const Mat2& z);

/// det Z = z0^2 - z1^2 - z2^2 - z3^2 in the z_mu variables.
Polynomial det_poly_z();

}  // namespace ccs

#endif
