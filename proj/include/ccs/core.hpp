#ifndef CCS_CORE_HPP
#define CCS_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ccs {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Minkowski metric diag(1,-1,-1,-1).
inline constexpr double eta(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

struct DomainViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidScaleDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSpin : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidIndex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ccs

#endif
