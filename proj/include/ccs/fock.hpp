#ifndef CCS_FOCK_HPP
#define CCS_FOCK_HPP

#include <map>
#include <string>
#include <vector>

#include "ccs/basis.hpp"

namespace ccs {

/// Occupation tuple; 8-mode order (a0,a1,a2,a3,b0,b1,b2,b3), 4-mode
/// (a1,a2,b1,b2), 2-mode (a,b).
using Occupation = std::vector<int>;

/// Sparse vector in bosonic Fock space.
struct FockVector {
  int modes = 0;
  std::map<Occupation, cplx> amps;

  static constexpr double amp_floor = 1e-14;

  static FockVector vacuum(int modes);

  FockVector& add(const Occupation& occ, cplx a);
  double norm() const;
  FockVector& scale(cplx s);
  FockVector& accumulate(const FockVector& o, cplx s = 1.0);
  void prune(double tol = amp_floor);
  double distance(const FockVector& o) const;  // max amplitude deviation
};

cplx inner(const FockVector& x, const FockVector& y);  // <x|y>

/// Normal-ordered boson bilinear (plus constant): each term creates over
/// `create` and annihilates over `annihilate`, both lists of length <= 2.
struct QuadraticOperator {
  struct Term {
    std::vector<int> create, annihilate;
    cplx coeff;
  };
  int modes = 0;
  std::vector<Term> terms;
  cplx constant = 0.0;

  QuadraticOperator& add_term(std::vector<int> cr, std::vector<int> an,
                              cplx c);
  QuadraticOperator operator+(const QuadraticOperator& o) const;
  QuadraticOperator operator*(cplx s) const;
};

FockVector apply(const QuadraticOperator& op, const FockVector& v);

/// X(Y(v)) - Y(X(v)).
FockVector apply_commutator(const QuadraticOperator& x,
                            const QuadraticOperator& y, const FockVector& v);

// ---- two-mode su(1,1) ----

struct Su11Generators {
  QuadraticOperator q3, qplus, qminus, q0;
};
Su11Generators su11_generators();

/// |kappa, n> (Fock pair (n, n+2kappa-1)); `negative` swaps the a/b
/// roles (the opposite-helicity orbit).
FockVector su11_basis(int two_kappa, int n, bool negative = false);
FockVector su11_cs(int two_kappa, cplx z, int cutoff, bool negative = false);

// ---- four-mode ladder representation ----

/// |kappa, n> with occupations (n1, n2, n3, 2kappa-1+n1+n2-n3); the
/// b-over-a excess stays 2kappa-1 across the multiplet.
FockVector ladder_basis(int two_kappa, int n1, int n2, int n3,
                        bool negative = false);
/// Series construction (degree-n coefficients with the i^n phase).
FockVector ladder_cs(int two_kappa, cplx z1, cplx z2, cplx z3, int cutoff,
                     bool negative = false);
/// Truncated exponential exp(i z.Q+) acting on the ground state.
FockVector ladder_cs_exponential(int two_kappa, cplx z1, cplx z2, cplx z3,
                                 int cutoff, bool negative = false);

/// Jordan-Schwinger sandwich of a 4x4 matrix generator (4 modes).
QuadraticOperator quad_sandwich_4mode(const Mat4& x);

// ---- eight-mode compound realization ----

QuadraticOperator quad_sandwich_8mode(const Mat4& x);
/// Single-constituent sandwich, p = 1 or 2.
QuadraticOperator quad_sandwich_constituent(const Mat4& x, int p);

/// Named generator as a Fock operator; names as in the generators
/// module plus "I4". modes is 4 or 8.
QuadraticOperator fock_generator(const std::string& name, int modes);
/// Constituent version ("P0".."P3", "M01".."M23"), 8 modes.
QuadraticOperator fock_generator_constituent(const std::string& name, int p);

/// Entry (r,c) of the matrix constraint Z^dag Gamma Z (8 modes).
QuadraticOperator constraint_entry_8mode(int r, int c);

/// Pauli-Lubanski W^mu = eta^{mu mu} (i/2) eps_{mu nu rho beta}
/// M^{nu rho} P^beta applied to v; constituent = 0 for the full set,
/// 1 or 2 for a single particle.
FockVector apply_pauli_lubanski(int mu, const FockVector& v,
                                int constituent = 0, int modes = 8);

FockVector lowest_weight(int lambda);

/// Eq. 67 compound state; exact creation-polynomial arithmetic.
FockVector compound_basis(const BasisIndex& idx);

struct OccupancyReport {
  struct Tuple {
    Occupation occ;
    int excess_left, excess_right;  // the two b-over-a excesses
    int two_qa, two_qb;             // occupation imbalances
    int degree;                     // 2 + (sum n)/2 - lambda, in units of 1
    bool pass;
  };
  std::vector<Tuple> tuples;
  bool all_pass = true;
};

/// Checks the excess constraints per supported tuple; with a BasisIndex
/// also the q imbalances and the degree relation.
OccupancyReport occupancy_constraints(const FockVector& v, int lambda);
OccupancyReport occupancy_constraints(const FockVector& v,
                                      const BasisIndex& idx);

/// Constituent exchange (a rows, b columns swapped).
FockVector exchange(const FockVector& v);

/// The pair-creation operator -A = -tr(Z^t K)/2 as a Fock operator.
QuadraticOperator exciton_creator(const Mat2& z);

/// det(1-Z^dag Z)^{lambda/2} exp(-A)|phi_0>, series truncated at exciton
/// order `cutoff`.
FockVector exciton_cs(const CartanPoint& z, int lambda, int cutoff);

/// (-A)^n/n! |phi_0>, one exciton order.
FockVector exciton_order_term(const Mat2& z, int lambda, int n);

struct ExcitonCommutator {
  double fock_value;    // exact arithmetic
  double closed_form;   // 2 eta_{mu mu}(lambda + n_e)/(2(lambda-2))
};
ExcitonCommutator exciton_commutator_expectation(const BasisIndex& idx,
                                                 int mu);

struct MassSpectrumResult {
  BasisIndex target;
  double coefficient;   // from Fock arithmetic
  double closed_form;   // Eq-43 P^2 coefficient
  double residual;      // | P^2 v - coeff * target | in Fock space
};
MassSpectrumResult mass_spectrum_action(const BasisIndex& idx);

}  // namespace ccs

#endif
