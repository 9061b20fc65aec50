#ifndef CCS_GENERATORS_HPP
#define CCS_GENERATORS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ccs/basis.hpp"

namespace ccs {

/// One of the sixteen differential generators or an angular-momentum
/// combination: D, P0..P3, K0..K3, M(mu<nu), Sa3/Sb3, Sa+/-, Sb+/-.
struct GeneratorName {
  enum class Kind { D, P, K, M, S3, SPlus, SMinus };

  Kind kind = Kind::D;
  int mu = 0, nu = 0;  // P/K index or the M pair (mu < nu)
  char ell = 'a';      // constituent label for the S family

  static GeneratorName parse(const std::string& s);  // "D","P2","M01","Sa+",...
  std::string str() const;
};

/// Exact polynomial action per the differential model:
///   P^mu = d/dz_mu,  M^{mu nu} = z^mu d^nu - z^nu d^mu,
///   D = z_mu d^mu + lambda,  K^mu = z^2 P^mu - 2 z^mu D,
/// indices raised with eta = diag(1,-1,-1,-1). S operators are the
/// (0j)/(kl) combinations with (j,k,l) cyclic.
Polynomial apply_generator_diff(const GeneratorName& g, const Polynomial& p,
                                int lambda);

/// C^{j,m}_{qa,qb} = sqrt((j+qa)(j+qb) m (lambda+m-2)) / sqrt(2j(2j+1)).
/// Throws InvalidSpin at j = 0 (the closed-form rows use the j->0 limit,
/// which vanishes, internally).
double coeff_C(int two_j, int m, int two_qa, int two_qb, int lambda);

struct MatrixElementRow {
  BasisIndex source;
  std::vector<std::pair<BasisIndex, cplx>> targets;
};

/// Closed-form expansion of G phi_idx over the basis. Ladder targets
/// that leave the index lattice are dropped after verifying their
/// printed coefficient vanishes.
MatrixElementRow generator_matrix_elements(const GeneratorName& g,
                                           const BasisIndex& idx);

enum class QuadraticName { MM, PP, KK, KP, PK, DD };
QuadraticName parse_quadratic(const std::string& s);  // "MM","P2","KP","D2",...

MatrixElementRow quadratic_action(QuadraticName q, const BasisIndex& idx);

/// Assembles D^2 - MM/2 + (PK + KP)/2 from the closed-form rows and
/// returns the (diagonal) eigenvalue; verifies it equals lambda(lambda-4).
double casimir2(const BasisIndex& idx);

/// Closed-form coherent-state symbol <Z|G|Z>. Accepts the linear names
/// ("D", "P0".."K3", "M01".."M23") and the quadratic ones
/// ("D2","PP","KK","PK","KP","MM"); "P2"/"K2" always mean the linear
/// generators.
cplx symbol(const std::string& name, const CartanPoint& z, int lambda);

/// Independent oracle: F^lambda sum_i conj(phi_i(Z)) (G phi_i)(Z) with the
/// expansion truncated at max_degree; accepts the same names as symbol().
cplx symbol_expansion_oracle(const std::string& name, const CartanPoint& z,
                             int lambda, int max_degree);

/// Same oracle for the product G1 G2 (the star product of symbols).
cplx symbol_product_oracle(const std::string& n1, const std::string& n2,
                           const CartanPoint& z, int lambda, int max_degree);

}  // namespace ccs

#endif
