#include "doctest.h"

#include <random>
#include <vector>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/rational.hpp"

using namespace ncinvert;

namespace {

Coefficient random_coefficient(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(0, 4);
  std::uniform_int_distribution<long> q_exponent(-3, 3);
  std::uniform_int_distribution<long> x_exponent(0, 3);
  std::uniform_int_distribution<long> numerator(-5, 5);
  std::uniform_int_distribution<long> denominator(1, 3);
  Coefficient out;
  const int count = term_count(rng);
  for (int i = 0; i < count; ++i) {
    Rational value(numerator(rng), denominator(rng));
    value.canonicalize();
    out.add_term(q_exponent(rng), x_exponent(rng), value);
  }
  return out;
}

}  // namespace

TEST_CASE("ring axioms on sampled elements") {
  std::mt19937 rng(20240816);
  for (int trial = 0; trial < 25; ++trial) {
    const Coefficient a = random_coefficient(rng);
    const Coefficient b = random_coefficient(rng);
    const Coefficient c = random_coefficient(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Coefficient::zero());
    CHECK(a * Coefficient::one() == a);
    CHECK(a - b == a + (-b));
  }
}

TEST_CASE("q inversion is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Coefficient a = random_coefficient(rng);
    CHECK(a.subst_q_inverse().subst_q_inverse() == a);
  }
  CHECK(Coefficient::q_power(3).subst_q_inverse() == Coefficient::q_power(-3));
  CHECK(Coefficient::q_power(2).eval_q_one() == Coefficient::one());
}

TEST_CASE("evaluations and truncation") {
  Coefficient p = Coefficient::x_power(3);
  p += Coefficient::x_power(1);
  CHECK(p.truncate_x(2) == Coefficient::x_power(1));
  CHECK(p.eval_x(Integer(2)) == Coefficient(10L));
  Coefficient mixed = Coefficient::monomial(2, 1, Rational(3));
  CHECK(mixed.eval_q_one() == Coefficient::x_power(1).scaled(Rational(3)));
  CHECK(mixed.eval_all_one() == Rational(3));
  CHECK(mixed.times_q_power(-2) == Coefficient::monomial(0, 1, Rational(3)));
  CHECK(mixed.times_x_power(1) == Coefficient::monomial(2, 2, Rational(3)));
  CHECK(mixed.min_q_exp() == 2);
  CHECK(mixed.max_q_exp() == 2);
  CHECK(mixed.max_x_exp() == 1);
  CHECK(mixed.is_zero() == false);
  CHECK(Coefficient::zero().is_zero());
}

TEST_CASE("binomial polynomials") {
  CHECK(binomial_poly(0) == Coefficient::one());
  // binom(x,2) = (x^2 - x)/2
  Coefficient expected = Coefficient::monomial(0, 2, Rational(1, 2));
  expected += Coefficient::monomial(0, 1, Rational(-1, 2));
  CHECK(binomial_poly(2) == expected);
  // binom(-1, m) = (-1)^m
  for (unsigned long m = 0; m <= 5; ++m) {
    const long sign = (m % 2 == 0) ? 1 : -1;
    CHECK(binomial_poly(m).eval_x(Integer(-1)) == Coefficient(sign));
  }
  // binom(x+1,2) = (x^2 + x)/2
  Coefficient shifted = Coefficient::monomial(0, 2, Rational(1, 2));
  shifted += Coefficient::monomial(0, 1, Rational(1, 2));
  CHECK(shifted_binomial_poly(1, 2) == shifted);
  CHECK(shifted_binomial_poly(3, 4).eval_x(Integer(1)) == Coefficient(1L));
  // rising(k) at x = 1 is k!/k! = 1
  for (unsigned long k = 0; k <= 6; ++k) {
    CHECK(rising_poly(k).eval_x(Integer(1)) == Coefficient(1L));
  }
  CHECK(rising_poly(2) == shifted);
}

TEST_CASE("text rendering of coefficients") {
  CHECK(Coefficient::zero().to_text() == "0");
  CHECK(Coefficient::one().to_text() == "1");
  CHECK(Coefficient::q_power(1).to_text() == "q");
  Coefficient p = Coefficient::q_power(1);
  p += Coefficient::q_power(2);
  CHECK(p.to_text() == "q + q^2");
  CHECK(Coefficient::q_power(1).scaled(Rational(2)).to_text() == "2·q");
  CHECK((-Coefficient::q_power(1)).to_text() == "-q");
  CHECK(Coefficient::x_power(1).scaled(Rational(1, 2)).to_text() == "1/2·x");
}
