#include "doctest.h"

#include <map>
#include <vector>

#include "ncinvert/composition.hpp"
#include "ncinvert/invert.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/parking.hpp"

using namespace ncinvert;

namespace {

/* All words of length n over 1..max, lexicographic. */
std::vector<Word> all_words(int n, int max) {
  std::vector<Word> out{{}};
  for (int pos = 0; pos < n; ++pos) {
    std::vector<Word> next;
    for (const Word& prefix : out) {
      for (int letter = 1; letter <= max; ++letter) {
        Word word = prefix;
        word.push_back(letter);
        next.push_back(std::move(word));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("family membership and bounds") {
  const ParkingFamily classic = ParkingFamily::classic();
  CHECK(is_member(classic, {1, 1, 2}));
  CHECK(is_member(classic, {3, 1, 2}));
  CHECK_FALSE(is_member(classic, {2, 2, 3}));
  CHECK(classic.max_letter(3) == 3);
  const ParkingFamily shifted = ParkingFamily::shifted(2);
  CHECK(shifted.max_letter(2) == 3);
  CHECK(is_member(shifted, {2, 3}));
  CHECK_FALSE(is_member(shifted, {3, 3}));
  const ParkingFamily arith = ParkingFamily::arithmetic(3, 2);
  CHECK(arith.max_letter(2) == 5);
  CHECK(is_member(arith, {2, 5}));
  CHECK_FALSE(is_member(arith, {3, 5}));
}

TEST_CASE("shifted equals arithmetic with k = 1") {
  for (int r = 1; r <= 3; ++r) {
    const ParkingFamily a = ParkingFamily::shifted(r);
    const ParkingFamily b = ParkingFamily::arithmetic(1, r);
    for (int n = 0; n <= 4; ++n) {
      CHECK(count_all(a, n) == count_all(b, n));
      CHECK(char_q(a, n) == char_q(b, n));
    }
  }
}

TEST_CASE("counts match the closed form") {
  const ParkingFamily classic = ParkingFamily::classic();
  CHECK(count_all(classic, 3) == 16);
  CHECK(count_closed_form(classic, 4) == 125);
  CHECK(count_all(ParkingFamily::shifted(2), 2) == 8);
  for (int n = 0; n <= 4; ++n) {
    CHECK(count_all(ParkingFamily::arithmetic(2, 1), n) ==
          count_closed_form(ParkingFamily::arithmetic(2, 1), n));
  }
}

TEST_CASE("nondecreasing enumeration is Catalan-sized for the classic family") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    CHECK(enumerate_nondecreasing(ParkingFamily::classic(), n).size() ==
          static_cast<std::size_t>(catalan[n]));
  }
}

TEST_CASE("caps throw beyond their bounds") {
  Caps caps;
  caps.nondecreasing = 3;
  caps.brute_force = 2;
  CHECK_THROWS_AS(enumerate_nondecreasing(ParkingFamily::classic(), 4, caps), CapExceeded);
  CHECK_THROWS_AS(count_all(ParkingFamily::classic(), 3, caps), CapExceeded);
  CHECK_NOTHROW(count_all(ParkingFamily::classic(), 2, caps));
}

TEST_CASE("parkize retracts onto the classic family") {
  CHECK(parkize({3, 3, 3}) == Word{1, 1, 1});
  CHECK(parkize({2, 3, 2}) == Word{1, 2, 1});
  for (int n = 1; n <= 4; ++n) {
    for (const Word& word : all_words(n, n + 2)) {
      const Word parked = parkize(word);
      CHECK(is_member(ParkingFamily::classic(), parked));
      CHECK(parkize(parked) == parked);
      if (is_member(ParkingFamily::classic(), word)) CHECK(parked == word);
    }
  }
}

TEST_CASE("connected factor counts follow the catalan triangle") {
  CHECK(connected_factor_count({1, 1, 2}) == 1);
  CHECK(connected_factor_count({1, 2, 3}) == 3);
  CHECK(connected_factor_count({1, 1, 3}) == 2);
  for (int n = 1; n <= 9; ++n) {
    std::map<int, long> histogram;
    for (const Word& word : enumerate_nondecreasing(ParkingFamily::classic(), n)) {
      ++histogram[connected_factor_count(word)];
    }
    for (int k = 1; k <= n; ++k) {
      CHECK(Integer(histogram[k]) == catalan_triangle_c(n, k));
    }
  }
}

TEST_CASE("graded characteristic matches direct norm sums") {
  // size 2: words 11 (norm 0) and 12 (norm 1)
  NcsfElement expected;
  expected.add_term({2}, Coefficient::one());
  expected.add_term({1, 1}, Coefficient::q_power(1));
  CHECK(char_q(ParkingFamily::classic(), 2) == expected);
  CHECK(char_q(ParkingFamily::classic(), 0) == NcsfElement::unit());
  // the (3,2) family at size 1 has the two words 1 and 2
  NcsfElement arith1;
  arith1.add_term({1}, Coefficient::one() + Coefficient::q_power(1));
  CHECK(char_q(ParkingFamily::arithmetic(3, 2), 1) == arith1);
}

TEST_CASE("generalized shuffle recursion at q = 1") {
  // ch(PF(r)_n) = sum_k ch(PF_k) ch(PF(r-1)_(n-k)) with all gradings dropped
  for (int r = 2; r <= 3; ++r) {
    for (int n = 0; n <= 5; ++n) {
      const NcsfElement lhs = char_q(ParkingFamily::shifted(r), n).eval_q_one();
      NcsfElement rhs;
      for (int k = 0; k <= n; ++k) {
        rhs += char_q(ParkingFamily::classic(), k).eval_q_one() *
               char_q(ParkingFamily::shifted(r - 1), n - k).eval_q_one();
      }
      CHECK(lhs == rhs);
    }
  }
}
