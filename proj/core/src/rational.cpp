#include "ncinvert/rational.hpp"

namespace ncinvert {

Integer integer_binomial(const Integer& n, unsigned long m) {
  Integer result = 1;
  for (unsigned long i = 0; i < m; ++i) {
    result *= n - static_cast<long>(i);
    // The running product of i+1 consecutive integers is divisible by (i+1)!.
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i + 1);
  }
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace ncinvert
