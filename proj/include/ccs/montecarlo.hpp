#ifndef CCS_MONTECARLO_HPP
#define CCS_MONTECARLO_HPP

#include <random>
#include <vector>

#include "ccs/basis.hpp"

namespace ccs {

/// Samples are split over this many deterministic (seed, stream) RNG
/// sub-streams; partial sums combine in stream order, so serial and
/// parallel runs produce bit-identical results.
constexpr int mc_streams = 64;

struct McOptions {
  int lambda = 5;
  long samples = 100000;
  unsigned long long seed = 1;
  bool parallel = true;
};

struct McEstimate {
  cplx value;
  double std_error = 0.0;
  long samples = 0;
  long accepted = 0;  // proposals that landed inside the domain
};

/// One proposal: each matrix entry uniform on the unit disk (consumes
/// exactly eight uniforms).
Mat2 mc_propose(std::mt19937_64& rng);

/// Integral of conj(f) h over the normalized measure, by rejection
/// weighting over the entry polydisk. Requires lambda >= 4.
McEstimate mc_inner_product(const PointEvaluator& f, const PointEvaluator& h,
                            const McOptions& opt);

/// Full Gram matrix of a basis index set in a single sweep (row-major
/// n x n values plus a matching std-error matrix).
struct McGram {
  std::vector<cplx> value;
  std::vector<double> std_error;
  int dim = 0;
  long samples = 0;
  long accepted = 0;
};

McGram mc_gram(const std::vector<BasisIndex>& basis, const McOptions& opt);

}  // namespace ccs

#endif
