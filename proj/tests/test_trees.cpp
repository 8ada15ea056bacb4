#include "doctest.h"

#include <map>
#include <set>

#include "ncinvert/composition.hpp"
#include "ncinvert/trees.hpp"

using namespace ncinvert;

namespace {

const OrderedTree kLeaf = OrderedTree::leaf();

OrderedTree node(std::vector<OrderedTree> children) { return OrderedTree::node(std::move(children)); }

}  // namespace

TEST_CASE("polish codes") {
  CHECK(polish_code(kLeaf) == "c");
  CHECK(polish_code(node({kLeaf, kLeaf})) == "d2 c c");
  CHECK(polish_code(node({node({kLeaf}), kLeaf})) == "d2 d1 c c");
  // with b = -1 the labels shift: a childless internal vertex prints d1
  CHECK(polish_code(node({}), -1) == "d1");
  CHECK(polish_code(node({kLeaf, kLeaf}), -1) == "d3 c c");
}

TEST_CASE("tree compositions and skeletons") {
  const OrderedTree tree = node({node({kLeaf}), kLeaf});
  CHECK(tree_composition(tree, 0) == Composition{2, 1});
  CHECK(internal_count(tree) == 2);
  const Skeleton skel = skeleton_of(tree, 0);
  CHECK(skel.label == 2);
  REQUIRE(skel.children.size() == 1);
  CHECK(skel.children[0].label == 1);
  // the skeleton chain (1,1) with b = 1 admits binom(2,1) = 2 trees
  Skeleton chain{1, {Skeleton{1, {}}}};
  CHECK(count_trees_with_skeleton(chain, 1) == 2);
  CHECK(count_trees_with_skeleton(Skeleton{3, {}}, 0) == 1);
  // path skeleton labeled (3,2,4,2): binom(3,1) binom(2,1) binom(4,1) binom(2,0)
  Skeleton path{3, {Skeleton{2, {Skeleton{4, {Skeleton{2, {}}}}}}}};
  CHECK(count_trees_with_skeleton(path, 0) == 24);
}

TEST_CASE("skeleton counts add up to tree counts") {
  for (int n = 1; n <= 6; ++n) {
    std::map<Skeleton, Integer> claimed;
    Integer total = 0;
    for (const OrderedTree& tree : enumerate_trees(n, 0)) {
      const Skeleton skel = skeleton_of(tree, 0);
      auto [it, inserted] = claimed.try_emplace(skel, Integer(0));
      if (inserted) it->second = count_trees_with_skeleton(skel, 0);
      total += 1;
    }
    Integer by_formula = 0;
    for (const auto& [skel, count] : claimed) by_formula += count;
    CHECK(by_formula == total);
  }
}

TEST_CASE("ballot coefficients") {
  CHECK(delta_b({3, 1, 2, 1}, 0) == 16);
  CHECK(delta_b({1, 3, 1, 1}, 1) == 34);
  CHECK(delta_b({2, 1}, 0) == 2);
  CHECK(delta_b({1, 2}, 0) == 1);
  CHECK(delta_b({1, 2}, -1) == 0);
  for (int b : {-1, 0, 1, 2, 5}) CHECK(delta_b({6}, b) == 1);
}

TEST_CASE("tree enumeration agrees with the ballot formula") {
  const auto by_comp = enumerate_trees_by_composition(3, 0);
  CHECK(by_comp.size() == 4);
  CHECK(by_comp.at({3}) == 1);
  CHECK(by_comp.at({2, 1}) == 2);
  CHECK(by_comp.at({1, 2}) == 1);
  CHECK(by_comp.at({1, 1, 1}) == 1);
  const auto schroeder = enumerate_trees_by_composition(2, 1);
  CHECK(schroeder.at({1, 1}) == 2);
  CHECK(schroeder.at({2}) == 1);
  for (int b : {-1, 0, 1, 2}) {
    for (int n = 1; n <= 5; ++n) {
      const auto enumerated = enumerate_trees_by_composition(n, b);
      for (const Composition& comp : compositions_of(n)) {
        const Integer expected = delta_b(comp, b);
        const auto it = enumerated.find(comp);
        const Integer got = (it == enumerated.end()) ? Integer(0) : it->second;
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("triangle rows") {
  const auto catalan = gamma_triangle(0, 4);
  CHECK(catalan[3] == std::vector<Integer>{5, 5, 3, 1});
  const auto schroeder = gamma_triangle(1, 3);
  CHECK(schroeder[2] == std::vector<Integer>{7, 3, 1});
  const auto b2 = gamma_triangle(2, 4);
  CHECK(b2[3] == std::vector<Integer>{85, 22, 5, 1});
  // b = -1 rows drop their leading zero entries
  const auto motzkin = gamma_triangle(-1, 4);
  CHECK(motzkin[0] == std::vector<Integer>{1});
  CHECK(motzkin[1] == std::vector<Integer>{1});
  CHECK(motzkin[2] == std::vector<Integer>{1, 1});
  CHECK(motzkin[3] == std::vector<Integer>{1, 2, 1});
}

TEST_CASE("row sums solve the rational functional equation") {
  const auto catalan = row_sum_series(0, 6);
  CHECK(catalan == std::vector<Integer>{1, 1, 2, 5, 14, 42, 132});
  const auto schroeder = row_sum_series(1, 5);
  CHECK(schroeder == std::vector<Integer>{1, 1, 3, 11, 45, 197});
  const auto shifted_motzkin = row_sum_series(-1, 7);
  CHECK(shifted_motzkin == std::vector<Integer>{1, 1, 1, 2, 4, 9, 21, 51});
}

TEST_CASE("dyck decomposition keys") {
  const auto n0 = dyck_decomposition_oracle(0);
  CHECK(n0.size() == 1);
  CHECK(n0.at({0}) == 1);
  const auto n1 = dyck_decomposition_oracle(1);
  CHECK(n1.size() == 1);
  CHECK(n1.at({1, 0}) == 1);
  const auto n2 = dyck_decomposition_oracle(2);
  CHECK(n2.size() == 2);
  CHECK(n2.at({1, 1, 0}) == 1);
  CHECK(n2.at({2, 0, 0}) == 1);
}

TEST_CASE("motzkin path enumeration and returns") {
  CHECK(enumerate_motzkin(0) == std::vector<std::string>{""});
  const auto len2 = enumerate_motzkin(2);
  CHECK(len2.size() == 2);
  CHECK(returns_to_zero("FF") == 2);
  CHECK(returns_to_zero("UD") == 1);
  CHECK(returns_to_zero("UFD") == 1);
  CHECK(returns_to_zero("") == 0);
  const auto triangle = motzkin_returns_triangle(4);
  CHECK(triangle[0] == std::vector<Integer>{1});
  CHECK(triangle[1] == std::vector<Integer>{1, 1});
  CHECK(triangle[2] == std::vector<Integer>{1, 2, 1});
  CHECK(triangle[3] == std::vector<Integer>{2, 3, 3, 1});
}

TEST_CASE("motzkin paths map to trees and back") {
  // flat steps become leaves; the empty path becomes a childless internal vertex
  CHECK(motzkin_to_tree("") == node({}));
  CHECK(motzkin_to_tree("FF") == node({kLeaf, kLeaf}));
  CHECK(motzkin_to_tree("UD") == node({node({})}));
  CHECK(motzkin_to_tree("UFD") == node({node({kLeaf})}));
  CHECK(tree_to_motzkin(node({node({kLeaf}), kLeaf})) == "UFDF");
  for (int n = 0; n <= 6; ++n) {
    std::set<OrderedTree> images;
    for (const std::string& path : enumerate_motzkin(n)) {
      const OrderedTree tree = motzkin_to_tree(path);
      CHECK(tree_to_motzkin(tree) == path);
      CHECK(images.insert(tree).second);  // injective
      // the composition weight exceeds the path length by one
      CHECK(weight(tree_composition(tree, -1)) == n + 1);
      // the root part is one more than the number of returns
      CHECK(tree_composition(tree, -1).front() == returns_to_zero(path) + 1);
    }
  }
}
