#ifndef CCS_INTMATH_HPP
#define CCS_INTMATH_HPP

#include <gmpxx.h>

namespace ccs {

mpz_class factorial(long n);
mpz_class binomial(long n, long k);  // 0 for k < 0 or k > n

double binomial_d(long n, long k);

/// sqrt(a!/b! * c!/d!) as a double, with the ratio formed exactly first.
double sqrt_factorial_ratio(long a, long b, long c, long d);

}  // namespace ccs

#endif
