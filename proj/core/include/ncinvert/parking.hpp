#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncinvert/ncsf.hpp"
#include "ncinvert/rational.hpp"

namespace ncinvert {

/* Raised when a requested enumeration exceeds the configured size caps.
 * Sizes grow fast here; the caps force the caller to opt in explicitly. */
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
  /* nondecreasing-representative enumerations (Catalan-sized) */
  int nondecreasing = 12;
  /* full word-space scans (n^n-sized) */
  int brute_force = 7;
};

const Caps& default_caps();

/* Words a of length n with sorted(a)_i <= l + (i-1)k.  The classic family is
 * k = l = 1; the shifted family with offset r is k = 1, l = r. */
struct ParkingFamily {
  enum class Kind { Classic, Shifted, Arithmetic };

  Kind kind = Kind::Classic;
  int k = 1;
  int l = 1;

  static ParkingFamily classic();
  static ParkingFamily shifted(int r);
  static ParkingFamily arithmetic(int k, int l);

  /* largest admissible letter: l + (n-1)k */
  int max_letter(int n) const;
  std::string display() const;
};

bool is_member(const ParkingFamily& family, const Word& word);

/* All nondecreasing members of length n, lexicographic order. */
std::vector<Word> enumerate_nondecreasing(const ParkingFamily& family, int n,
                                          const Caps& caps = default_caps());

/* Family count by full scan of the word space. */
Integer count_all(const ParkingFamily& family, int n, const Caps& caps = default_caps());

/* l (l + kn)^(n-1); matches count_all. */
Integer count_closed_form(const ParkingFamily& family, int n);

/* Sum over nondecreasing members v of q^||v|| S^(pEv(v)): the q-graded
 * characteristic of the family's projective modules. */
NcsfElement char_q(const ParkingFamily& family, int n, const Caps& caps = default_caps());

/* Classic-family retraction: repeatedly find the smallest k whose letter
 * count below it is deficient and decrement every larger letter.  Fixed
 * points are exactly the parking words. */
Word parkize(const Word& word);

/* 1 + #{j in [1, n-1] : b_{j+1} = j+1} for a nondecreasing parking word b:
 * the number of blocks in its finest factorization into parking words. */
int connected_factor_count(const Word& word);

}  // namespace ncinvert
