#include "doctest.h"

#include <random>
#include <vector>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/composition.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/rational.hpp"

using namespace ncinvert;

namespace {

/* Gaussian binomial [m choose k]_q via the Pascal recursion
 * [m k] = [m-1 k-1] + q^k [m-1 k]; independent of the library internals. */
Coefficient gaussian_binomial(int m, int k) {
  if (k < 0 || k > m) return Coefficient::zero();
  std::vector<std::vector<Coefficient>> table(
      static_cast<std::size_t>(m) + 1,
      std::vector<Coefficient>(static_cast<std::size_t>(k) + 1, Coefficient::zero()));
  for (int i = 0; i <= m; ++i) {
    table[static_cast<std::size_t>(i)][0] = Coefficient::one();
    for (int j = 1; j <= std::min(i, k); ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
              .times_q_power(j);
    }
  }
  return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

NcsfElement random_element(std::mt19937& rng, Basis basis, int max_weight) {
  std::uniform_int_distribution<int> weight_dist(0, max_weight);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<long> value_dist(-3, 3);
  NcsfElement out(basis);
  const int terms = count_dist(rng);
  for (int t = 0; t < terms; ++t) {
    const int n = weight_dist(rng);
    const auto comps = compositions_of(n);
    std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
    out.add_term(comps[pick(rng)], Coefficient(value_dist(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("product concatenates complete keys") {
  const NcsfElement s1 = NcsfElement::s_generator(1);
  CHECK(s1 * s1 == NcsfElement::from_key(Basis::S, {1, 1}));
  const NcsfElement s2 = NcsfElement::s_generator(2);
  CHECK(s2 * s1 == NcsfElement::from_key(Basis::S, {2, 1}));
  CHECK(NcsfElement::unit() * s2 == s2);
  // bilinearity
  const NcsfElement sum = (s1 + s2) * s1;
  CHECK(sum == NcsfElement::from_key(Basis::S, {1, 1}) + NcsfElement::from_key(Basis::S, {2, 1}));
}

TEST_CASE("single ribbon and elementary expansions") {
  // S^(3) has an empty descent set, so it is the single ribbon R_3.
  CHECK(NcsfElement::s_generator(3).to_basis(Basis::R) == NcsfElement::from_key(Basis::R, {3}));
  // R_(2,1) = S^(2,1) - S^(3)
  const NcsfElement r21 = NcsfElement::from_key(Basis::R, {2, 1}).to_basis(Basis::S);
  CHECK(r21 == NcsfElement::from_key(Basis::S, {2, 1}) - NcsfElement::s_generator(3));
  // The degree-2 elementary generator expands as S^(1,1) - S^(2).
  const NcsfElement lam2 = NcsfElement::from_key(Basis::L, {2}).to_basis(Basis::S);
  CHECK(lam2 == NcsfElement::from_key(Basis::S, {1, 1}) - NcsfElement::s_generator(2));
}

TEST_CASE("basis conversions round-trip") {
  for (int n = 0; n <= 8; ++n) {
    for (const Composition& comp : compositions_of(n)) {
      const NcsfElement s = NcsfElement::from_key(Basis::S, comp);
      CHECK(s.to_basis(Basis::R).to_basis(Basis::S) == s);
      CHECK(s.to_basis(Basis::L).to_basis(Basis::S) == s);
      const NcsfElement r = NcsfElement::from_key(Basis::R, comp);
      CHECK(r.to_basis(Basis::S).to_basis(Basis::R) == r);
      const NcsfElement l = NcsfElement::from_key(Basis::L, comp);
      CHECK(l.to_basis(Basis::S).to_basis(Basis::L) == l);
    }
  }
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const NcsfElement elem = random_element(rng, Basis::S, 6);
    CHECK(elem.to_basis(Basis::R).to_basis(Basis::S) == elem);
    CHECK(elem.to_basis(Basis::L).to_basis(Basis::S) == elem);
  }
}

TEST_CASE("ribbon product rule") {
  // R_I R_J = R_(I.J) + R_(I|>J) where |> merges the touching parts.
  for (int a = 1; a <= 3; ++a) {
    for (const Composition& left : compositions_of(a)) {
      for (int b = 1; a + b <= 7 && b <= 3; ++b) {
        for (const Composition& right : compositions_of(b)) {
          const NcsfElement product = (NcsfElement::from_key(Basis::R, left).to_basis(Basis::S) *
                                       NcsfElement::from_key(Basis::R, right).to_basis(Basis::S))
                                          .to_basis(Basis::R);
          Composition glued = left;
          Composition merged = left;
          glued.insert(glued.end(), right.begin(), right.end());
          merged.back() += right.front();
          merged.insert(merged.end(), right.begin() + 1, right.end());
          CHECK(product == NcsfElement::from_key(Basis::R, glued) +
                               NcsfElement::from_key(Basis::R, merged));
        }
      }
    }
  }
}

TEST_CASE("nu conjugates complete keys and is an involution") {
  CHECK(NcsfElement::from_key(Basis::S, {3}).nu() == NcsfElement::from_key(Basis::S, {1, 1, 1}));
  // (2,1) and (1,2) are self-conjugate ribbons
  CHECK(NcsfElement::from_key(Basis::S, {2, 1}).nu() == NcsfElement::from_key(Basis::S, {2, 1}));
  CHECK(NcsfElement::from_key(Basis::S, {1, 2}).nu() == NcsfElement::from_key(Basis::S, {1, 2}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const NcsfElement elem = random_element(rng, Basis::S, 6);
    CHECK(elem.nu().nu() == elem);
  }
}

TEST_CASE("alphabet multiples") {
  // S_2(2A) = 2 S^(2) + S^(1,1)
  NcsfElement expected;
  expected.add_term({2}, Coefficient(2L));
  expected.add_term({1, 1}, Coefficient::one());
  CHECK(NcsfElement::s_generator(2).alphabet_multiple(2) == expected);
  // (-1)-fold multiple is the alphabet negation
  for (int n = 0; n <= 5; ++n) {
    CHECK(NcsfElement::s_generator(n).alphabet_negate() ==
          NcsfElement::s_generator(n).alphabet_multiple(-1));
  }
  // S_2(-A) = S^(1,1) - S^(2), the degree-2 elementary image
  CHECK(NcsfElement::s_generator(2).alphabet_negate() ==
        NcsfElement::from_key(Basis::L, {2}).to_basis(Basis::S));
  // negation is an involution
  std::mt19937 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    const NcsfElement elem = random_element(rng, Basis::S, 6);
    CHECK(elem.alphabet_negate().alphabet_negate() == elem);
  }
}

TEST_CASE("alphabet multiples compose") {
  for (long m : {-2L, -1L, 0L, 2L, 3L}) {
    for (long n : {-2L, 1L, 2L}) {
      for (int deg = 0; deg <= 6; ++deg) {
        const NcsfElement nested =
            NcsfElement::s_generator(deg).alphabet_multiple(m).alphabet_multiple(n);
        const NcsfElement direct = NcsfElement::s_generator(deg).alphabet_multiple(m * n);
        CHECK(nested == direct);
      }
    }
  }
}

TEST_CASE("q-interval alphabets") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(NcsfElement::s_generator(n).alphabet_q_interval(1) == NcsfElement::s_generator(n));
    for (long copies = 0; copies <= 4; ++copies) {
      CHECK(NcsfElement::s_generator(n).alphabet_q_interval(copies).eval_q_one() ==
            NcsfElement::s_generator(n).alphabet_multiple(copies));
    }
  }
}

TEST_CASE("geometric monomial evaluation sums to a gaussian binomial") {
  // The complete generator at the q-interval alphabet specializes, in the
  // commutative image with x_i = q^(i-1), to [N+n-1 choose n]_q.
  CHECK(monomial_q_eval({1}, 4) == gaussian_binomial(4, 1));  // 1 + q + q^2 + q^3
  for (int n = 1; n <= 5; ++n) {
    for (long copies = 1; copies <= 4; ++copies) {
      Coefficient total;
      for (const Composition& comp : compositions_of(n)) {
        total += monomial_q_eval(comp, copies);
      }
      CHECK(total == gaussian_binomial(static_cast<int>(copies) + n - 1, n));
    }
  }
}

TEST_CASE("scalar specializations") {
  CHECK(NcsfElement::from_key(Basis::S, {2, 1}).specialize_one() == Coefficient::one());
  // x^3 / 2! 1!
  CHECK(NcsfElement::from_key(Basis::S, {2, 1}).specialize_exp() ==
        Coefficient::monomial(0, 3, Rational(1, 2)));
  // binom(alpha+1, 2) x^2 at alpha = 2 is 3 x^2
  CHECK(NcsfElement::s_generator(2).specialize_binomial(2) ==
        Coefficient::monomial(0, 2, Rational(3)));
  CHECK(NcsfElement::unit().specialize_binomial(5) == Coefficient::one());
}

TEST_CASE("commutative image merges rearranged keys") {
  NcsfElement elem;
  elem.add_term({2, 1}, Coefficient::one());
  elem.add_term({1, 2}, Coefficient(2L));
  elem.add_term({3}, Coefficient::one());
  const auto image = elem.commutative_image();
  CHECK(image.size() == 2);
  CHECK(image.at({2, 1}) == Coefficient(3L));
  CHECK(image.at({3}) == Coefficient::one());
}

TEST_CASE("element text rendering") {
  NcsfElement g2;
  g2.add_term({2}, Coefficient::one());
  g2.add_term({1, 1}, Coefficient::q_power(1));
  CHECK(g2.to_text() == "S[2] + q·S[1,1]");
  CHECK(NcsfElement::unit().to_text() == "1");
  CHECK(NcsfElement(Basis::S).to_text() == "0");
  NcsfElement multi;
  multi.add_term({2, 1}, Coefficient::q_power(1) + Coefficient::q_power(2));
  CHECK(multi.to_text() == "(q + q^2)·S[2,1]");
}

TEST_CASE("x-series algebra") {
  XSeries series(3);
  series.at(0) = NcsfElement::unit();
  series.at(1) = NcsfElement::s_generator(1);
  const XSeries inverse = series.inverse();
  XSeries unit_series(3);
  unit_series.at(0) = NcsfElement::unit();
  CHECK(series * inverse == unit_series);
  // scaling x by a q power multiplies degree n by q^(e n)
  XSeries scaled = series.subst_x_q_scale(2);
  CHECK(scaled.at(1) == NcsfElement::s_generator(1).scaled(Coefficient::q_power(2)));
  CHECK(scaled.at(0) == NcsfElement::unit());
}
