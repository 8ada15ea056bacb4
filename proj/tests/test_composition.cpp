#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncinvert/composition.hpp"

using namespace ncinvert;

TEST_CASE("composition predicates and weight") {
  CHECK(is_composition(Composition{}));
  CHECK(is_composition({2, 1, 3}));
  CHECK_FALSE(is_composition({2, 0, 1}));
  CHECK(is_gen_composition({2, 0, 1}));
  CHECK_FALSE(is_gen_composition({2, -1}));
  CHECK(weight(Composition{}) == 0);
  CHECK(weight({3, 1, 2, 1}) == 7);
}

TEST_CASE("descent sets determine compositions") {
  CHECK(descent_set({3, 1, 2}) == std::vector<int>{3, 4});
  CHECK(composition_from_descent_set({3, 4}, 6) == Composition{3, 1, 2});
  for (int n = 0; n <= 8; ++n) {
    for (const Composition& comp : compositions_of(n)) {
      CHECK(composition_from_descent_set(descent_set(comp), n) == comp);
    }
  }
}

TEST_CASE("conjugation is a weight-preserving involution") {
  CHECK(conjugate({4}) == Composition{1, 1, 1, 1});
  CHECK(conjugate({1, 1, 1, 1}) == Composition{4});
  CHECK(conjugate({2, 1, 1, 1, 2, 2}) == Composition{1, 2, 5, 1});
  for (int n = 1; n <= 8; ++n) {
    for (const Composition& comp : compositions_of(n)) {
      const Composition conj = conjugate(comp);
      CHECK(weight(conj) == n);
      CHECK(static_cast<long>(conj.size()) == n + 1 - static_cast<long>(comp.size()));
      CHECK(conjugate(conj) == comp);
    }
  }
}

TEST_CASE("coarsenings are the supersets of the descent relation") {
  const auto coarse = coarsenings({1, 1, 1});
  CHECK(coarse.size() == 4);
  CHECK(coarsenings({3}) == std::vector<Composition>{{3}});
  // Every coarsening of I has a descent set contained in I's.
  for (const Composition& comp : compositions_of(5)) {
    const auto descents = descent_set(comp);
    const std::set<long> base(descents.begin(), descents.end());
    for (const Composition& up : coarsenings(comp)) {
      for (long d : descent_set(up)) CHECK(base.count(d) == 1);
    }
  }
}

TEST_CASE("compositions_of counts") {
  CHECK(compositions_of(0) == std::vector<Composition>{{}});
  for (int n = 1; n <= 8; ++n) {
    CHECK(compositions_of(n).size() == (1u << (n - 1)));
  }
}

TEST_CASE("evaluations of words") {
  CHECK(evaluation({1, 1, 3}, 4) == GenComposition{2, 0, 1, 0});
  CHECK(packed_evaluation({1, 1, 3}) == Composition{2, 1});
  CHECK(word_from_evaluation({2, 0, 1, 0}) == Word{1, 1, 3});
  CHECK(word_norm({1, 1, 3}) == 2);
  CHECK(word_norm({1}) == 0);
  CHECK(corresponding_composition({2, 0, 1, 0}) == Composition{2, 1});
}

TEST_CASE("parking-type generalized compositions") {
  CHECK(is_parking_type({1, 0}));
  CHECK(is_parking_type({2, 0, 1, 0}));
  CHECK(is_parking_type({1, 1, 0}));
  CHECK_FALSE(is_parking_type({1, 0, 2}));  // second prefix sum falls short
  CHECK_FALSE(is_parking_type({0, 2, 0}));
  CHECK_FALSE(is_parking_type({2, 1}));  // wrong length for its weight
}
