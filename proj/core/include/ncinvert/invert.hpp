#pragma once

#include <string>
#include <vector>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/composition.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/rational.hpp"

namespace ncinvert {

/* Degree-graded solution of a functional equation: components[d] collects
 * the terms of degree d (for series in x, the coefficient of x^d). */
struct SolverResult {
  std::string equation;
  int order = 0;
  std::vector<NcsfElement> components;

  const NcsfElement& at(int deg) const;
};

/* g = 1 + S_1 g + S_2 g^2 + ...  The degree-n component is the graded
 * characteristic of the parking functions of size n. */
SolverResult solve_g(int order);

/* 1 = h + S_1 h^2 + S_2 h^3 + ...  Components alternate in sign. */
SolverResult solve_h(int order);

/* f = T_0 + T_1 f + T_2 f^2 + ... over generators T_n of weight n, with
 * T_0 a genuine letter rather than the unit; keys pick up zero parts and
 * the degree-n component is supported on keys of length n + 1. */
SolverResult solve_f0(int order);

/* g = 1 + d_1 g^{b+1} + d_2 g^{b+2} + ... (b >= -1).  The coefficient of
 * the key I in the degree-n component counts plane trees whose internal
 * vertices carry the parts of I in prefix order, arity = part + b. */
SolverResult solve_b_family(int b, int order);

/* K(x) = qx (1 + S_1 K(x) + S_2 K(qx)K(x) + S_3 K(q^2 x)K(qx)K(x) + ...);
 * the degree-n entry matches q times the q->1/q image of the degree-(n-1)
 * parking characteristic. */
XSeries solve_k(int order);

/* Ratio route: with F_r(x) = sum_n x^n q^{-binom(n,2)} S_n([n+r]_q A),
 * the series F_r(x/q) F_{r-1}(x)^{-1} has degree-n coefficient
 * q^{-binom(n+1,2)} times the degree-n parking characteristic.  Components
 * are returned with that prefactor removed.  pre: r >= 1. */
SolverResult quotient_g(int r, int order);

/* Bookkeeping for the prefactor of the (k,l) ratio in q-mode: for each
 * degree, the exponent that actually aligns the raw ratio with the
 * enumerative characteristic, next to two closed-form candidates. */
struct KlNormalization {
  /* e with raw_n = q^e * characteristic_n; unset entries are flagged */
  std::vector<long> inferred;
  std::vector<bool> matched;
  /* -k*binom(n+1,2) */
  std::vector<long> triangular;
  /* -k*binom(n+1,2) - n*(n*k + l) */
  std::vector<long> triangular_shifted;
};

/* Ratio route for the (k,l) family.  q_mode = false works at q = 1 with
 * F(x) = sum_n x^n S_n((nk+r)A) and ratio F^{(r)}(x) F^{(r-l)}(x)^{-1};
 * q_mode = true uses F(x) = sum_n x^n q^{-k binom(n+1,2)} S_n([nk+r]_q A)
 * and ratio F^{(r)}(x) [F^{(r-l)}(q^l x)]^{-1}.  `raw` holds the ratio
 * coefficients as computed; `normalized` divides out the inferred q-power
 * (q-mode) or repeats raw (q = 1).  pre: k, l >= 1 and r > l (pass r = 0
 * for the default r = l + 1). */
struct KlQuotient {
  int k = 1;
  int l = 1;
  int r = 2;
  bool q_mode = false;
  SolverResult raw;
  SolverResult normalized;
  KlNormalization normalization;
};

KlQuotient quotient_kl(int k, int l, int order, bool q_mode, int r = 0);

/* Binomial-tower polynomial attached to size n: with U the positive-degree
 * part of the q = 1 parking series, P_n = sum_m binom(x, m) (U^m)_n.
 * Coefficients are polynomials in x. */
NcsfElement abel_polynomial(int n);

/* Same element assembled directly from the nondecreasing parking functions
 * of size n: sum over words w of binom(x + c(w) - 1, c(w)) S^{pEv(w)} with
 * c(w) the connected-factor count. */
NcsfElement abel_via_ndpf(int n);

/* Image of abel_polynomial(n) under the all-ones specialization, in closed
 * form: x (x+n+1)(x+n+2)...(x+2n-1) / n!. */
Coefficient abel_one_closed_form(int n);

/* Number of nondecreasing parking functions of size n with exactly k
 * connected factors: (k / (2n-k)) binom(2n-k, n-k) for 1 <= k <= n. */
Integer catalan_triangle_c(int n, int k);

}  // namespace ncinvert
