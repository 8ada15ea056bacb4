#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncinvert/composition.hpp"
#include "ncinvert/rational.hpp"

namespace ncinvert {

/* Plane rooted tree.  A node is either a leaf or an internal vertex; an
 * internal vertex may have zero children, which is distinct from a leaf
 * (the grafting alphabet needs both). */
struct OrderedTree {
  bool internal = false;
  std::vector<OrderedTree> children;

  friend bool operator==(const OrderedTree& a, const OrderedTree& b) {
    return a.internal == b.internal && a.children == b.children;
  }
  friend bool operator<(const OrderedTree& a, const OrderedTree& b) {
    if (a.internal != b.internal) return a.internal < b.internal;
    return a.children < b.children;
  }

  static OrderedTree leaf();
  static OrderedTree node(std::vector<OrderedTree> children);
};

/* Prefix-order Polish code with labels shifted by b: internal vertices of
 * arity a print as "d(a-b)", leaves as "c".  E.g. node(leaf, leaf) with
 * b = 0 prints "d2 c c". */
std::string polish_code(const OrderedTree& tree, int b = 0);

/* Parts (arity - b) of the internal vertices in prefix order. */
Composition tree_composition(const OrderedTree& tree, int b);

/* Number of internal vertices. */
int internal_count(const OrderedTree& tree);

/* Skeleton: the internal vertices alone, each labeled with its
 * (arity - b) part; leaf children vanish, internal children keep order. */
struct Skeleton {
  int label = 0;
  std::vector<Skeleton> children;

  friend bool operator==(const Skeleton& a, const Skeleton& b) {
    return a.label == b.label && a.children == b.children;
  }
  friend bool operator<(const Skeleton& a, const Skeleton& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.children < b.children;
  }
};

/* pre: the root is internal */
Skeleton skeleton_of(const OrderedTree& tree, int b);

/* Number of trees with the given skeleton: the product over skeleton
 * vertices of binom(label + b, #children). */
Integer count_trees_with_skeleton(const Skeleton& skeleton, int b);

/* Coefficient of the word d_{i_1}...d_{i_p} in the grafting series with
 * shift b: the sum over ballot prefixes (a_1,...,a_{p-1}), a_1+...+a_j >= j,
 * total p-1, of prod binom(i_j + b, a_j). */
Integer delta_b(const Composition& comp, int b);

/* Every plane tree whose (arity - b) parts sum to n, each internal arity
 * at least max(b+1, 0).  Brute-force oracle for delta_b. */
std::vector<OrderedTree> enumerate_trees(int n, int b);

/* Tree counts of weight n keyed by composition; agrees with delta_b. */
std::map<Composition, Integer> enumerate_trees_by_composition(int n, int b);

/* Rows n = 1..rows of gamma(b): entry p of row n sums delta_b over the
 * compositions of n with first part p.  Leading zero entries of a row are
 * dropped (they occur only for b = -1). */
std::vector<std::vector<Integer>> gamma_triangle(int b, int rows);

/* Degree 0..n coefficients of the solution of g = 1 + t g^(b+1) / (1 - tg). */
std::vector<Integer> row_sum_series(int b, int n);

/* Factorize u·b for each Dyck word u with n openers over the code
 * {a^m b : m >= 0} and key the result by the sequence of run lengths.
 * Every key carries multiplicity one. */
std::map<GenComposition, Integer> dyck_decomposition_oracle(int n);

/* Motzkin paths as strings over U (up), F (flat), D (down). */
std::vector<std::string> enumerate_motzkin(int n);
int returns_to_zero(const std::string& path);

/* Path -> tree: split at the returns to zero into segments; the root gets
 * one child per segment, a leaf for a flat segment and the recursive image
 * of the inner path for an up-down segment.  The empty path maps to a
 * childless internal vertex ("d0"), which keeps the map injective. */
OrderedTree motzkin_to_tree(const std::string& path);
/* Inverse of motzkin_to_tree.  pre: the root is internal. */
std::string tree_to_motzkin(const OrderedTree& tree);

/* Rows n = 1..rows; entry k-1 of row n counts the Motzkin paths of
 * length n with exactly k returns to zero. */
std::vector<std::vector<Integer>> motzkin_returns_triangle(int rows);

}  // namespace ncinvert
