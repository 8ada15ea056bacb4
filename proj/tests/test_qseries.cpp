#include "doctest.h"

#include "ncinvert/qseries.hpp"

using namespace ncinvert;

TEST_CASE("pochhammer products") {
  const QSeriesTrunc two = q_pochhammer(2, 8);
  // (1-q)(1-q^2) = 1 - q - q^2 + q^3
  CHECK(two.at(0) == 1);
  CHECK(two.at(1) == -1);
  CHECK(two.at(2) == -1);
  CHECK(two.at(3) == 1);
  CHECK(two.at(4) == 0);
  CHECK(q_pochhammer(0, 4).agrees_with(QSeriesTrunc::one(4)));
}

TEST_CASE("reciprocal of 1-q is the geometric series") {
  QSeriesTrunc one_minus_q(7);
  one_minus_q.add_term(0, Rational(1));
  one_minus_q.add_term(1, Rational(-1));
  const QSeriesTrunc geo = one_minus_q.reciprocal();
  for (long e = 0; e < geo.order(); ++e) CHECK(geo.at(e) == 1);
  CHECK((one_minus_q * geo).agrees_with(QSeriesTrunc::one(7)));
}

TEST_CASE("reciprocal of (q)_2 counts partitions into parts at most 2") {
  const QSeriesTrunc series = q_pochhammer(2, 7).reciprocal();
  const long expected[] = {1, 1, 2, 2, 3, 3, 4};
  for (long e = 0; e < 7; ++e) CHECK(series.at(e) == expected[e]);
}

TEST_CASE("laurent window arithmetic") {
  QSeriesTrunc a(5);
  a.add_term(-1, Rational(1));
  a.add_term(0, Rational(1));
  CHECK(a.floor_exp() == -1);
  const QSeriesTrunc shifted = a.times_q_power(2);
  CHECK(shifted.at(1) == 1);
  CHECK(shifted.at(2) == 1);
  CHECK(shifted.order() == 7);
  const QSeriesTrunc b = a * a;
  CHECK(b.at(-2) == 1);
  CHECK(b.at(-1) == 2);
  CHECK(b.at(0) == 1);
  CHECK(a.truncated(2).order() == 2);
  QSeriesTrunc c = a;
  c -= a;
  CHECK(c.is_zero());
}

TEST_CASE("agreement compares the shared window only") {
  QSeriesTrunc coarse(2);
  coarse.add_term(0, Rational(1));
  QSeriesTrunc fine(6);
  fine.add_term(0, Rational(1));
  fine.add_term(3, Rational(9));
  CHECK(coarse.agrees_with(fine));
  fine.add_term(1, Rational(1));
  CHECK_FALSE(coarse.agrees_with(fine));
}
