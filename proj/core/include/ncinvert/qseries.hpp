#pragma once

#include <map>
#include <string>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/rational.hpp"

namespace ncinvert {

/* Truncated Laurent series in q over Q.  Exponents live in a finite window;
 * everything at or above the truncation order is unknown and dropped.  Used
 * for the specializations whose q-expansions do not terminate (infinite
 * q-interval alphabets), where the polynomial Coefficient type cannot
 * represent the value. */
class QSeriesTrunc {
 public:
  explicit QSeriesTrunc(long order);

  static QSeriesTrunc zero(long order);
  static QSeriesTrunc one(long order);
  /* pre: the coefficient is x-free */
  static QSeriesTrunc from_coefficient(const Coefficient& c, long order);

  long order() const { return order_; }
  /* lowest stored exponent; order() when the window holds nothing */
  long floor_exp() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Rational>& terms() const { return terms_; }
  Rational at(long exp) const;

  void add_term(long exp, const Rational& value);

  QSeriesTrunc& operator+=(const QSeriesTrunc& rhs);
  QSeriesTrunc& operator-=(const QSeriesTrunc& rhs);
  friend QSeriesTrunc operator+(QSeriesTrunc a, const QSeriesTrunc& b) { return a += b; }
  friend QSeriesTrunc operator-(QSeriesTrunc a, const QSeriesTrunc& b) { return a -= b; }
  friend QSeriesTrunc operator*(const QSeriesTrunc& a, const QSeriesTrunc& b);

  QSeriesTrunc times_q_power(long e) const;
  QSeriesTrunc truncated(long order) const;

  /* Multiplicative inverse.
   * pre: nonzero with an exactly-known leading term.
   * The result window starts at minus the leading exponent. */
  QSeriesTrunc reciprocal() const;

  /* Equality of the overlapping window (up to the smaller order). */
  bool agrees_with(const QSeriesTrunc& other) const;

  std::string to_text() const;

 private:
  long order_;
  std::map<long, Rational> terms_;
};

/* (q)_n = (1-q)(1-q^2)...(1-q^n), truncated. */
QSeriesTrunc q_pochhammer(unsigned long n, long order);

}  // namespace ncinvert
