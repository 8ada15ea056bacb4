#pragma once

#include <gmpxx.h>

#include <string>

namespace ncinvert {

/* Exact arbitrary-precision arithmetic.  mpq_class keeps denominators
 * positive and fractions reduced, which is exactly the canonical form the
 * rest of the library relies on. */
using Integer = mpz_class;
using Rational = mpq_class;

/* binom(n, m) for any integer n (negative allowed) and m >= 0, via the
 * falling-factorial product. */
Integer integer_binomial(const Integer& n, unsigned long m);

Integer factorial(unsigned long n);

}  // namespace ncinvert
