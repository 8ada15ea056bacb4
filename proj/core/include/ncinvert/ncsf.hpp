#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/composition.hpp"

namespace ncinvert {

/* S: products of the complete generators S_n (a multiplicative basis whose
 * product concatenates keys).  R: ribbons.  L: products of the elementary
 * generators (multiplicative as well). */
enum class Basis { S, R, L };

char basis_letter(Basis b);

/* Element of the free algebra on one ordered set of generators, expressed in
 * one of the three bases, with Coefficient entries.  Keys are generalized
 * compositions; zero parts are meaningful only in the S basis (S_0 slots of
 * the grafting equation) and are rejected by the R/L conversions.  Canonical
 * form stores no zero coefficients, so equality is structural. */
class NcsfElement {
 public:
  using TermMap = std::map<GenComposition, Coefficient>;

  NcsfElement() : basis_(Basis::S) {}
  explicit NcsfElement(Basis basis) : basis_(basis) {}

  static NcsfElement unit(Basis basis = Basis::S);
  /* S_n; the unit for n = 0 */
  static NcsfElement s_generator(int n);
  static NcsfElement from_key(Basis basis, GenComposition key, Coefficient coeff = Coefficient::one());

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const GenComposition& key) const;
  bool has_zero_part_key() const;
  /* largest key weight; 0 when zero */
  long degree() const;

  void add_term(const GenComposition& key, const Coefficient& coeff);

  NcsfElement& operator+=(const NcsfElement& rhs);
  NcsfElement& operator-=(const NcsfElement& rhs);
  NcsfElement operator-() const;
  friend NcsfElement operator+(NcsfElement a, const NcsfElement& b) { return a += b; }
  friend NcsfElement operator-(NcsfElement a, const NcsfElement& b) { return a -= b; }
  /* pre: both operands in the S basis */
  friend NcsfElement operator*(const NcsfElement& a, const NcsfElement& b);
  friend bool operator==(const NcsfElement& a, const NcsfElement& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NcsfElement& a, const NcsfElement& b) { return !(a == b); }

  NcsfElement scaled(const Coefficient& factor) const;

  /* Basis changes round-trip exactly.  R and L require zero-free keys. */
  NcsfElement to_basis(Basis target) const;

  /* The linear involution S^I -> S^{I~}.  pre: S basis, zero-free keys. */
  NcsfElement nu() const;

  /* Algebra endomorphisms defined on the generators and extended
   * multiplicatively.  pre: S basis, zero-free keys. */
  NcsfElement alphabet_negate() const;
  NcsfElement alphabet_multiple(long copies) const;
  NcsfElement alphabet_q_interval(long n) const;

  /* S^I -> 1 (coefficient sum). */
  Coefficient specialize_one() const;
  /* S^I -> x^n / (i_1! i_2! ...), the exponential specialization. */
  Coefficient specialize_exp() const;
  /* S_n -> binom(alpha + n - 1, n) x^n on each part. */
  Coefficient specialize_binomial(long alpha) const;
  /* Abelianization: keys collapse to partitions (parts sorted decreasingly,
   * zeros dropped). */
  std::map<std::vector<int>, Coefficient> commutative_image() const;

  NcsfElement eval_q_one() const;
  NcsfElement subst_q_inverse() const;

  /* Terms ordered by key length, then lexicographically decreasing, e.g.
   * "S[2] + q·S[1,1]". */
  std::string to_text() const;

 private:
  Basis basis_;
  TermMap terms_;
};

/* M_I([n]_q): sum of q^(i_1 j_1 + ... + i_l j_l) over
 * 0 <= j_1 < ... < j_l <= n-1. */
Coefficient monomial_q_eval(const Composition& comp, long n);

/* Truncated power series in a central variable x with NcsfElement
 * coefficients.  A fixed-degree entry may mix key weights. */
class XSeries {
 public:
  explicit XSeries(int order);

  int order() const { return order_; }
  NcsfElement& at(int deg);
  const NcsfElement& at(int deg) const;

  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend bool operator==(const XSeries& a, const XSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /* pre: the degree-0 entry is the unit.  Two-sided inverse. */
  XSeries inverse() const;
  /* x -> q^e x */
  XSeries subst_x_q_scale(long e) const;

 private:
  int order_;
  std::vector<NcsfElement> coeffs_;
};

}  // namespace ncinvert
