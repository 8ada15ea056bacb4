#include "ncinvert/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncinvert {

bool is_composition(const Composition& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; });
}

bool is_gen_composition(const GenComposition& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 0; });
}

long weight(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

std::vector<int> descent_set(const Composition& comp) {
  if (!is_composition(comp)) throw std::invalid_argument("descent_set: parts must be positive");
  std::vector<int> descents;
  long sum = 0;
  for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
    sum += comp[i];
    descents.push_back(static_cast<int>(sum));
  }
  return descents;
}

Composition composition_from_descent_set(const std::vector<int>& descents, long n) {
  Composition comp;
  if (n == 0) {
    if (!descents.empty()) throw std::invalid_argument("composition_from_descent_set: nonempty descents for n = 0");
    return comp;
  }
  long prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n) throw std::invalid_argument("composition_from_descent_set: descents must increase within (0, n)");
    comp.push_back(static_cast<int>(d - prev));
    prev = d;
  }
  comp.push_back(static_cast<int>(n - prev));
  return comp;
}

Composition conjugate(const Composition& comp) {
  const long n = weight(comp);
  const std::vector<int> descents = descent_set(comp);
  std::vector<int> mirrored;
  for (long d = n - 1; d >= 1; --d) {
    if (!std::binary_search(descents.begin(), descents.end(), static_cast<int>(d))) {
      mirrored.push_back(static_cast<int>(n - d));
    }
  }
  return composition_from_descent_set(mirrored, n);
}

std::vector<Composition> coarsenings(const Composition& comp) {
  const long n = weight(comp);
  const std::vector<int> descents = descent_set(comp);
  const std::size_t r = descents.size();
  std::vector<Composition> result;
  result.reserve(std::size_t{1} << r);
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(descents[i]);
    }
    result.push_back(composition_from_descent_set(subset, n));
  }
  return result;
}

std::vector<Composition> compositions_of(long n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
  std::vector<Composition> result;
  if (n == 0) {
    result.emplace_back();
    return result;
  }
  Composition current;
  // Depth-first in increasing first-part order yields lexicographic order.
  auto rec = [&](auto&& self, long rest) -> void {
    if (rest == 0) {
      result.push_back(current);
      return;
    }
    for (long p = 1; p <= rest; ++p) {
      current.push_back(static_cast<int>(p));
      self(self, rest - p);
      current.pop_back();
    }
  };
  rec(rec, n);
  return result;
}

GenComposition evaluation(const Word& word, int size) {
  GenComposition ev(static_cast<std::size_t>(size), 0);
  for (int letter : word) {
    if (letter < 1 || letter > size) throw std::invalid_argument("evaluation: letter out of range");
    ++ev[static_cast<std::size_t>(letter - 1)];
  }
  return ev;
}

Composition packed_evaluation(const Word& word) {
  int size = 0;
  for (int letter : word) size = std::max(size, letter);
  return corresponding_composition(evaluation(word, size));
}

Composition corresponding_composition(const GenComposition& gen) {
  Composition comp;
  for (int p : gen) {
    if (p < 0) throw std::invalid_argument("corresponding_composition: negative part");
    if (p > 0) comp.push_back(p);
  }
  return comp;
}

bool is_parking_type(const GenComposition& gen) {
  if (!is_gen_composition(gen)) return false;
  const long n = weight(gen);
  if (static_cast<long>(gen.size()) != n + 1) return false;
  long sum = 0;
  for (long k = 1; k <= n; ++k) {
    sum += gen[static_cast<std::size_t>(k - 1)];
    if (sum < k) return false;
  }
  return true;
}

Word word_from_evaluation(const GenComposition& gen) {
  Word word;
  for (std::size_t j = 0; j < gen.size(); ++j) {
    if (gen[j] < 0) throw std::invalid_argument("word_from_evaluation: negative multiplicity");
    word.insert(word.end(), static_cast<std::size_t>(gen[j]), static_cast<int>(j + 1));
  }
  return word;
}

long word_norm(const Word& word) {
  long norm = 0;
  for (int letter : word) norm += letter - 1;
  return norm;
}

}  // namespace ncinvert
