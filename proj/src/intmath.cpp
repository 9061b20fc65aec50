#include "ccs/intmath.hpp"

#include <cmath>

#include "ccs/core.hpp"

namespace ccs {

mpz_class factorial(long n) {
  if (n < 0) throw InvalidIndex("factorial of negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

double binomial_d(long n, long k) { return binomial(n, k).get_d(); }

double sqrt_factorial_ratio(long a, long b, long c, long d) {
  mpq_class q(factorial(a) * factorial(c), factorial(b) * factorial(d));
  q.canonicalize();
  return std::sqrt(q.get_d());
}

}  // namespace ccs
