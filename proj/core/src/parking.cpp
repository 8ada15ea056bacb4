#include "ncinvert/parking.hpp"

#include <algorithm>
#include <sstream>

namespace ncinvert {

const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

ParkingFamily ParkingFamily::classic() { return {Kind::Classic, 1, 1}; }

ParkingFamily ParkingFamily::shifted(int r) {
  if (r < 1) throw std::invalid_argument("ParkingFamily::shifted: offset must be positive");
  return {Kind::Shifted, 1, r};
}

ParkingFamily ParkingFamily::arithmetic(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("ParkingFamily::arithmetic: parameters must be positive");
  return {Kind::Arithmetic, k, l};
}

int ParkingFamily::max_letter(int n) const {
  if (n <= 0) return 0;
  return l + (n - 1) * k;
}

std::string ParkingFamily::display() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Classic: out << "classic"; break;
    case Kind::Shifted: out << "shifted(r=" << l << ")"; break;
    case Kind::Arithmetic: out << "arithmetic(k=" << k << ",l=" << l << ")"; break;
  }
  return out.str();
}

bool is_member(const ParkingFamily& family, const Word& word) {
  Word sorted = word;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) return false;
    if (sorted[i] > family.l + static_cast<int>(i) * family.k) return false;
  }
  return true;
}

std::vector<Word> enumerate_nondecreasing(const ParkingFamily& family, int n, const Caps& caps) {
  if (n < 0) throw std::invalid_argument("enumerate_nondecreasing: negative length");
  if (n > caps.nondecreasing)
    throw CapExceeded("enumerate_nondecreasing: n exceeds the nondecreasing cap");
  std::vector<Word> result;
  Word current;
  auto rec = [&](auto&& self, int index, int last) -> void {
    if (index == n) {
      result.push_back(current);
      return;
    }
    const int bound = family.l + index * family.k;
    for (int a = last; a <= bound; ++a) {
      current.push_back(a);
      self(self, index + 1, a);
      current.pop_back();
    }
  };
  rec(rec, 0, 1);
  return result;
}

Integer count_all(const ParkingFamily& family, int n, const Caps& caps) {
  if (n < 0) throw std::invalid_argument("count_all: negative length");
  if (n > caps.brute_force) throw CapExceeded("count_all: n exceeds the brute-force cap");
  if (n == 0) return 1;
  const int top = family.max_letter(n);
  Integer count = 0;
  Word word(static_cast<std::size_t>(n), 1);
  for (;;) {
    if (is_member(family, word)) ++count;
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == top) {
      word[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return count;
}

Integer count_closed_form(const ParkingFamily& family, int n) {
  if (n < 0) throw std::invalid_argument("count_closed_form: negative length");
  if (n == 0) return 1;
  Integer base = family.l + static_cast<long>(family.k) * n;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return family.l * power;
}

NcsfElement char_q(const ParkingFamily& family, int n, const Caps& caps) {
  NcsfElement result(Basis::S);
  for (const Word& v : enumerate_nondecreasing(family, n, caps)) {
    result.add_term(packed_evaluation(v), Coefficient::q_power(word_norm(v)));
  }
  return result;
}

Word parkize(const Word& word) {
  for (int letter : word) {
    if (letter < 1) throw std::invalid_argument("parkize: letters must be positive");
  }
  Word current = word;
  const int n = static_cast<int>(current.size());
  for (;;) {
    int deficient = 0;
    for (int k = 1; k <= n; ++k) {
      long below = std::count_if(current.begin(), current.end(), [k](int a) { return a <= k; });
      if (below < k) {
        deficient = k;
        break;
      }
    }
    if (deficient == 0) return current;
    for (int& a : current) {
      if (a > deficient) --a;
    }
  }
}

int connected_factor_count(const Word& word) {
  if (!is_member(ParkingFamily::classic(), word))
    throw std::invalid_argument("connected_factor_count: not a parking word");
  if (!std::is_sorted(word.begin(), word.end()))
    throw std::invalid_argument("connected_factor_count: word must be nondecreasing");
  if (word.empty()) return 0;
  int count = 1;
  for (std::size_t j = 1; j < word.size(); ++j) {
    if (word[j] == static_cast<int>(j) + 1) ++count;
  }
  return count;
}

}  // namespace ncinvert
