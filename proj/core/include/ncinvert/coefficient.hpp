#pragma once

#include <map>
#include <string>
#include <utility>

#include "ncinvert/rational.hpp"

namespace ncinvert {

/* Exact element of Q[x][q, q^-1]: finitely many monomials q^a x^b with
 * rational coefficients, a any integer, b >= 0.  The x slot doubles as the
 * commuting indeterminate written t or z by the specializations.  Canonical
 * form: no zero coefficients stored, so the zero element is the empty map
 * and operator== is structural. */
class Coefficient {
 public:
  /* (q exponent, x exponent) */
  using Key = std::pair<long, long>;
  using TermMap = std::map<Key, Rational>;

  Coefficient() = default;
  explicit Coefficient(Rational value);
  explicit Coefficient(long value);

  static Coefficient zero();
  static Coefficient one();
  static Coefficient monomial(long q_exp, long x_exp, Rational value);
  static Coefficient q_power(long e);
  static Coefficient x_power(long e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }

  void add_term(long q_exp, long x_exp, const Rational& value);

  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);
  Coefficient operator-() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  Coefficient scaled(const Rational& factor) const;
  Coefficient times_q_power(long e) const;
  Coefficient times_x_power(long e) const;

  /* q -> 1/q */
  Coefficient subst_q_inverse() const;
  /* q -> 1 */
  Coefficient eval_q_one() const;
  /* x -> integer constant; the result involves q only */
  Coefficient eval_x(const Integer& value) const;
  /* value at q = 1 and x = 1 */
  Rational eval_all_one() const;
  /* drop monomials with x exponent above the bound */
  Coefficient truncate_x(long bound) const;

  bool is_q_free() const;
  bool is_x_free() const;
  /* pre: !is_zero() */
  long min_q_exp() const;
  long max_q_exp() const;
  long max_x_exp() const;

  /* Canonical rendering: monomials sorted by (q exp, x exp), e.g.
   * "1 + q^2", "1/2·x + 1/2·x^2", "q^-3". */
  std::string to_text() const;

 private:
  TermMap terms_;
};

/* binom(x, m) as a polynomial in x. */
Coefficient binomial_poly(unsigned long m);
/* binom(x + shift, m) as a polynomial in x. */
Coefficient shifted_binomial_poly(long shift, unsigned long m);
/* x(x+1)...(x+k-1)/k!, the k-th complete homogeneous value on x letters. */
Coefficient rising_poly(unsigned long k);

}  // namespace ncinvert
