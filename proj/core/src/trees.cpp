#include "ncinvert/trees.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncinvert {

OrderedTree OrderedTree::leaf() { return OrderedTree{}; }

OrderedTree OrderedTree::node(std::vector<OrderedTree> children) {
  OrderedTree tree;
  tree.internal = true;
  tree.children = std::move(children);
  return tree;
}

namespace {

void polish_walk(const OrderedTree& tree, int b, std::string& out) {
  if (!out.empty()) out += ' ';
  if (!tree.internal) {
    out += 'c';
    return;
  }
  out += 'd';
  out += std::to_string(static_cast<int>(tree.children.size()) - b);
  for (const OrderedTree& child : tree.children) polish_walk(child, b, out);
}

void composition_walk(const OrderedTree& tree, int b, Composition& out) {
  if (!tree.internal) return;
  out.push_back(static_cast<int>(tree.children.size()) - b);
  for (const OrderedTree& child : tree.children) composition_walk(child, b, out);
}

}  // namespace

std::string polish_code(const OrderedTree& tree, int b) {
  std::string out;
  polish_walk(tree, b, out);
  return out;
}

Composition tree_composition(const OrderedTree& tree, int b) {
  Composition out;
  composition_walk(tree, b, out);
  return out;
}

int internal_count(const OrderedTree& tree) {
  if (!tree.internal) return 0;
  int count = 1;
  for (const OrderedTree& child : tree.children) count += internal_count(child);
  return count;
}

Skeleton skeleton_of(const OrderedTree& tree, int b) {
  if (!tree.internal) throw std::invalid_argument("skeleton_of: root must be internal");
  Skeleton out;
  out.label = static_cast<int>(tree.children.size()) - b;
  for (const OrderedTree& child : tree.children) {
    if (child.internal) out.children.push_back(skeleton_of(child, b));
  }
  return out;
}

Integer count_trees_with_skeleton(const Skeleton& skeleton, int b) {
  Integer count = integer_binomial(Integer(skeleton.label + b),
                                   static_cast<unsigned long>(skeleton.children.size()));
  for (const Skeleton& child : skeleton.children) {
    count *= count_trees_with_skeleton(child, b);
  }
  return count;
}

Integer delta_b(const Composition& comp, int b) {
  if (!is_composition(comp)) throw std::invalid_argument("delta_b: not a composition");
  const int p = static_cast<int>(comp.size());
  if (p == 0) return 1;
  for (int part : comp) {
    if (part + b < 0) return 0;  // would require a negative arity
  }
  /* Walk the internal vertices in prefix order; dp[t] accumulates the
   * binomial products over the choices whose internal-child counts sum to
   * t so far.  A valid tree needs t >= j after j vertices (ballot
   * condition) and t = p - 1 at the end. */
  std::vector<Integer> dp(static_cast<std::size_t>(p), Integer(0));
  dp[0] = 1;
  for (int j = 1; j <= p; ++j) {
    std::vector<Integer> next(static_cast<std::size_t>(p), Integer(0));
    const Integer arity(comp[static_cast<std::size_t>(j - 1)] + b);
    const int max_children = comp[static_cast<std::size_t>(j - 1)] + b;
    for (int t = 0; t < p; ++t) {
      if (dp[static_cast<std::size_t>(t)] == 0) continue;
      for (int a = 0; a <= max_children && t + a <= p - 1; ++a) {
        next[static_cast<std::size_t>(t + a)] +=
            dp[static_cast<std::size_t>(t)] * integer_binomial(arity, static_cast<unsigned long>(a));
      }
    }
    if (j < p) {
      for (int t = 0; t < j; ++t) next[static_cast<std::size_t>(t)] = 0;
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(p - 1)];
}

namespace {

class TreeEnumerator {
 public:
  explicit TreeEnumerator(int b) : b_(b) {}

  const std::vector<OrderedTree>& internal_rooted(int weight) {
    auto it = cache_.find(weight);
    if (it != cache_.end()) return it->second;
    std::vector<OrderedTree> result;
    for (int part = 1; part <= weight; ++part) {
      const int arity = part + b_;
      if (arity < 0) continue;
      std::vector<std::vector<OrderedTree>> charges = child_vectors(arity, weight - part);
      for (std::vector<OrderedTree>& kids : charges) {
        result.push_back(OrderedTree::node(std::move(kids)));
      }
    }
    return cache_.emplace(weight, std::move(result)).first->second;
  }

 private:
  /* Every ordered list of `slots` subtrees whose weights add up to
   * `remaining`; a weight-0 slot holds a leaf. */
  std::vector<std::vector<OrderedTree>> child_vectors(int slots, int remaining) {
    std::vector<std::vector<OrderedTree>> out;
    if (slots == 0) {
      if (remaining == 0) out.emplace_back();
      return out;
    }
    for (int first_weight = 0; first_weight <= remaining; ++first_weight) {
      std::vector<OrderedTree> heads;
      if (first_weight == 0) {
        heads.push_back(OrderedTree::leaf());
      } else {
        heads = internal_rooted(first_weight);
      }
      if (heads.empty()) continue;
      const std::vector<std::vector<OrderedTree>> tails =
          child_vectors(slots - 1, remaining - first_weight);
      for (const OrderedTree& head : heads) {
        for (const std::vector<OrderedTree>& tail : tails) {
          std::vector<OrderedTree> kids;
          kids.reserve(tail.size() + 1);
          kids.push_back(head);
          kids.insert(kids.end(), tail.begin(), tail.end());
          out.push_back(std::move(kids));
        }
      }
    }
    return out;
  }

  int b_;
  std::map<int, std::vector<OrderedTree>> cache_;
};

}  // namespace

std::vector<OrderedTree> enumerate_trees(int n, int b) {
  if (n < 0) throw std::invalid_argument("enumerate_trees: negative weight");
  if (n == 0) return {OrderedTree::leaf()};
  TreeEnumerator enumerator(b);
  return enumerator.internal_rooted(n);
}

std::map<Composition, Integer> enumerate_trees_by_composition(int n, int b) {
  std::map<Composition, Integer> out;
  for (const OrderedTree& tree : enumerate_trees(n, b)) {
    out[tree_composition(tree, b)] += 1;
  }
  return out;
}

std::vector<std::vector<Integer>> gamma_triangle(int b, int rows) {
  if (rows < 0) throw std::invalid_argument("gamma_triangle: negative row count");
  std::vector<std::vector<Integer>> out;
  for (int n = 1; n <= rows; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n), Integer(0));
    for (const Composition& comp : compositions_of(n)) {
      row[static_cast<std::size_t>(comp.front() - 1)] += delta_b(comp, b);
    }
    std::size_t first = 0;
    while (first < row.size() && row[first] == 0) ++first;
    row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(first));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<Integer> poly_mul_trunc(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b,
                                    std::size_t size) {
  std::vector<Integer> out(size, Integer(0));
  for (std::size_t i = 0; i < a.size() && i < size; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < size; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/* [t^k] g^e for e >= 0. */
Integer power_coefficient(const std::vector<Integer>& g, int e, int k) {
  const std::size_t size = static_cast<std::size_t>(k) + 1;
  std::vector<Integer> p(size, Integer(0));
  p[0] = 1;
  for (int i = 0; i < e; ++i) p = poly_mul_trunc(p, g, size);
  return p[static_cast<std::size_t>(k)];
}

}  // namespace

std::vector<Integer> row_sum_series(int b, int n) {
  if (b < -1) throw std::invalid_argument("row_sum_series: requires b >= -1");
  if (n < 0) throw std::invalid_argument("row_sum_series: negative order");
  /* Solve g = 1 + sum_{m >= 1} t^m g^{b+m} degree by degree; the degree-n
   * coefficient only involves lower-degree ones. */
  std::vector<Integer> g{Integer(1)};
  for (int k = 1; k <= n; ++k) {
    Integer c(0);
    for (int m = 1; m <= k; ++m) {
      c += power_coefficient(g, b + m, k - m);
    }
    g.push_back(c);
  }
  return g;
}

namespace {

void dyck_gen(int open_left, int height, std::string& cur, std::vector<std::string>& out) {
  if (open_left == 0 && height == 0) {
    out.push_back(cur);
    return;
  }
  if (open_left > 0) {
    cur += 'a';
    dyck_gen(open_left - 1, height + 1, cur, out);
    cur.pop_back();
  }
  if (height > 0) {
    cur += 'b';
    dyck_gen(open_left, height - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::map<GenComposition, Integer> dyck_decomposition_oracle(int n) {
  if (n < 0) throw std::invalid_argument("dyck_decomposition_oracle: negative size");
  std::vector<std::string> words;
  std::string cur;
  dyck_gen(n, 0, cur, words);
  std::map<GenComposition, Integer> out;
  for (const std::string& word : words) {
    const std::string closed = word + 'b';
    GenComposition runs;
    int run = 0;
    for (char step : closed) {
      if (step == 'a') {
        ++run;
      } else {
        runs.push_back(run);
        run = 0;
      }
    }
    out[runs] += 1;
  }
  return out;
}

namespace {

void motzkin_gen(int steps_left, int height, std::string& cur, std::vector<std::string>& out) {
  if (height > steps_left) return;  // cannot come back down in time
  if (steps_left == 0) {
    out.push_back(cur);
    return;
  }
  if (height > 0) {
    cur += 'D';
    motzkin_gen(steps_left - 1, height - 1, cur, out);
    cur.pop_back();
  }
  cur += 'F';
  motzkin_gen(steps_left - 1, height, cur, out);
  cur.pop_back();
  cur += 'U';
  motzkin_gen(steps_left - 1, height + 1, cur, out);
  cur.pop_back();
}

}  // namespace

std::vector<std::string> enumerate_motzkin(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_motzkin: negative length");
  std::vector<std::string> out;
  std::string cur;
  motzkin_gen(n, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

int returns_to_zero(const std::string& path) {
  int height = 0;
  int returns = 0;
  for (char step : path) {
    if (step == 'U') {
      ++height;
    } else if (step == 'D') {
      --height;
      if (height < 0) throw std::invalid_argument("returns_to_zero: path dips below zero");
    } else if (step != 'F') {
      throw std::invalid_argument("returns_to_zero: invalid step");
    }
    if (height == 0) ++returns;
  }
  if (height != 0) throw std::invalid_argument("returns_to_zero: path does not end at zero");
  return returns;
}

OrderedTree motzkin_to_tree(const std::string& path) {
  std::vector<OrderedTree> children;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == 'F') {
      children.push_back(OrderedTree::leaf());
      ++i;
    } else if (path[i] == 'U') {
      int depth = 1;
      std::size_t j = i + 1;
      while (j < path.size() && depth > 0) {
        if (path[j] == 'U') ++depth;
        if (path[j] == 'D') --depth;
        ++j;
      }
      if (depth != 0) throw std::invalid_argument("motzkin_to_tree: unbalanced path");
      children.push_back(motzkin_to_tree(path.substr(i + 1, j - i - 2)));
      i = j;
    } else {
      throw std::invalid_argument("motzkin_to_tree: invalid step");
    }
  }
  return OrderedTree::node(std::move(children));
}

std::string tree_to_motzkin(const OrderedTree& tree) {
  if (!tree.internal) throw std::invalid_argument("tree_to_motzkin: root must be internal");
  std::string out;
  for (const OrderedTree& child : tree.children) {
    if (!child.internal) {
      out += 'F';
    } else {
      out += 'U';
      out += tree_to_motzkin(child);
      out += 'D';
    }
  }
  return out;
}

std::vector<std::vector<Integer>> motzkin_returns_triangle(int rows) {
  if (rows < 0) throw std::invalid_argument("motzkin_returns_triangle: negative row count");
  std::vector<std::vector<Integer>> out;
  for (int n = 1; n <= rows; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n), Integer(0));
    for (const std::string& path : enumerate_motzkin(n)) {
      row[static_cast<std::size_t>(returns_to_zero(path) - 1)] += 1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ncinvert
