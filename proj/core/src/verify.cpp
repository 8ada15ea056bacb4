#include "ncinvert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/composition.hpp"
#include "ncinvert/invert.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/parking.hpp"
#include "ncinvert/pgraph.hpp"
#include "ncinvert/rational.hpp"
#include "ncinvert/trees.hpp"

namespace ncinvert {

namespace {

/* ------------------------------------------------------------------ *
 *  harness helpers                                                    *
 * ------------------------------------------------------------------ */

int depth(const VerifyOptions& options, int native) {
  if (options.max_degree < 0) return native;
  return std::min(native, options.max_degree);
}

class CheckLog {
 public:
  void fail(const std::string& message) {
    ++failures_;
    if (failures_ <= 6) {
      if (!failure_text_.empty()) failure_text_ += "; ";
      failure_text_ += message;
    }
  }

  void note(const std::string& message) {
    if (!note_text_.empty()) note_text_ += "; ";
    note_text_ += message;
  }

  CheckOutcome outcome() const {
    CheckOutcome out;
    out.pass = failures_ == 0;
    if (failures_ == 0) {
      out.detail = note_text_;
    } else {
      out.detail = failure_text_;
      if (failures_ > 6) out.detail += "; (+" + std::to_string(failures_ - 6) + " more)";
    }
    return out;
  }

 private:
  int failures_ = 0;
  std::string failure_text_;
  std::string note_text_;
};

std::string ints_text(const std::vector<int>& parts) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << "]";
  return out.str();
}

std::string row_text(const std::vector<Integer>& row) {
  std::ostringstream out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << " ";
    out << row[i].get_str();
  }
  return out.str();
}

/* Sum of value * q^exp monomials. */
Coefficient q_poly(const std::vector<std::pair<long, long>>& terms) {
  Coefficient out;
  for (const auto& [exp, value] : terms) out.add_term(exp, 0, Rational(value));
  return out;
}

/* Sum of (num/den) * x^exp monomials. */
Coefficient x_poly(const std::vector<std::tuple<long, long, long>>& terms) {
  Coefficient out;
  for (const auto& [exp, num, den] : terms) {
    Rational value(num, den);
    value.canonicalize();
    out.add_term(0, exp, value);
  }
  return out;
}

/* The constant value of a q-free, x-free Coefficient. */
bool constant_value(const Coefficient& coeff, Rational& out) {
  if (coeff.is_zero()) {
    out = Rational(0);
    return true;
  }
  if (coeff.terms().size() != 1) return false;
  const auto& [key, value] = *coeff.terms().begin();
  if (key.first != 0 || key.second != 0) return false;
  out = value;
  return true;
}

/* The rational coefficient of x^n in a q-free Coefficient. */
Rational rational_at_x(const Coefficient& coeff, long n) {
  const auto it = coeff.terms().find(Coefficient::Key{0, n});
  return it == coeff.terms().end() ? Rational(0) : it->second;
}

std::vector<Rational> series_mul_trunc(const std::vector<Rational>& a,
                                       const std::vector<Rational>& b, int top) {
  std::vector<Rational> out(static_cast<std::size_t>(top) + 1, Rational(0));
  for (int i = 0; i <= top; ++i) {
    if (static_cast<std::size_t>(i) >= a.size()) break;
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= top; ++j) {
      if (static_cast<std::size_t>(j) >= b.size()) break;
      out[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Integer integer_power(long base, long exponent) {
  Integer out = 1;
  for (long i = 0; i < exponent; ++i) out *= base;
  return out;
}

/* ------------------------------------------------------------------ *
 *  frozen golden data                                                 *
 * ------------------------------------------------------------------ */

/* Graded characteristics of the classic family, sizes 0..4. */
std::vector<NcsfElement> expected_charq_classic() {
  std::vector<NcsfElement> table;
  table.push_back(NcsfElement::unit());
  table.push_back(NcsfElement::s_generator(1));

  NcsfElement g2;
  g2.add_term({2}, Coefficient::one());
  g2.add_term({1, 1}, Coefficient::q_power(1));
  table.push_back(g2);

  NcsfElement g3;
  g3.add_term({3}, Coefficient::one());
  g3.add_term({2, 1}, q_poly({{1, 1}, {2, 1}}));
  g3.add_term({1, 2}, Coefficient::q_power(2));
  g3.add_term({1, 1, 1}, Coefficient::q_power(3));
  table.push_back(g3);

  NcsfElement g4;
  g4.add_term({4}, Coefficient::one());
  g4.add_term({3, 1}, q_poly({{1, 1}, {2, 1}, {3, 1}}));
  g4.add_term({2, 2}, q_poly({{2, 1}, {4, 1}}));
  g4.add_term({1, 3}, Coefficient::q_power(3));
  g4.add_term({2, 1, 1}, q_poly({{3, 1}, {4, 1}, {5, 1}}));
  g4.add_term({1, 2, 1}, q_poly({{4, 1}, {5, 1}}));
  g4.add_term({1, 1, 2}, Coefficient::q_power(5));
  g4.add_term({1, 1, 1, 1}, Coefficient::q_power(6));
  table.push_back(g4);
  return table;
}

/* q = 1 series, sizes 0..4.  The size-4 coefficient of S[1,3] is 1: it is
 * forced by the graded table above (q^3 there) and by the commutative
 * image, and it matches the one nondecreasing parking word 1222. */
std::vector<NcsfElement> expected_g_series() {
  std::vector<NcsfElement> table;
  for (const NcsfElement& graded : expected_charq_classic()) table.push_back(graded.eval_q_one());
  return table;
}

/* Commutative images, sizes 0..4, keyed by decreasing part multisets. */
std::vector<std::map<std::vector<int>, Coefficient>> expected_commutative() {
  std::vector<std::map<std::vector<int>, Coefficient>> table(5);
  table[0][{}] = Coefficient::one();
  table[1][{1}] = Coefficient::one();
  table[2][{2}] = Coefficient::one();
  table[2][{1, 1}] = Coefficient::one();
  table[3][{3}] = Coefficient::one();
  table[3][{2, 1}] = Coefficient(3L);
  table[3][{1, 1, 1}] = Coefficient::one();
  table[4][{4}] = Coefficient::one();
  table[4][{3, 1}] = Coefficient(4L);
  table[4][{2, 2}] = Coefficient(2L);
  table[4][{2, 1, 1}] = Coefficient(6L);
  table[4][{1, 1, 1, 1}] = Coefficient::one();
  return table;
}

/* Grafted x-series through x^5. */
std::vector<NcsfElement> expected_k_series() {
  std::vector<NcsfElement> table(6);
  table[1] = NcsfElement::unit().scaled(Coefficient::q_power(1));
  table[2].add_term({1}, Coefficient::q_power(2));
  table[3].add_term({2}, Coefficient::q_power(4));
  table[3].add_term({1, 1}, Coefficient::q_power(3));
  table[4].add_term({3}, Coefficient::q_power(7));
  table[4].add_term({2, 1}, q_poly({{5, 1}, {6, 1}}));
  table[4].add_term({1, 2}, Coefficient::q_power(5));
  table[4].add_term({1, 1, 1}, Coefficient::q_power(4));
  table[5].add_term({4}, Coefficient::q_power(11));
  table[5].add_term({3, 1}, q_poly({{8, 1}, {9, 1}, {10, 1}}));
  table[5].add_term({2, 2}, q_poly({{7, 1}, {9, 1}}));
  table[5].add_term({1, 3}, Coefficient::q_power(8));
  table[5].add_term({2, 1, 1}, q_poly({{6, 1}, {7, 1}, {8, 1}}));
  table[5].add_term({1, 2, 1}, q_poly({{6, 1}, {7, 1}}));
  table[5].add_term({1, 1, 2}, Coefficient::q_power(6));
  table[5].add_term({1, 1, 1, 1}, Coefficient::q_power(5));
  return table;
}

/* Letter-key solution, sizes 0..3. */
std::vector<NcsfElement> expected_f0_series() {
  std::vector<NcsfElement> table(4);
  table[0].add_term({0}, Coefficient::one());
  table[1].add_term({1, 0}, Coefficient::one());
  table[2].add_term({1, 1, 0}, Coefficient::one());
  table[2].add_term({2, 0, 0}, Coefficient::one());
  table[3].add_term({1, 1, 1, 0}, Coefficient::one());
  table[3].add_term({1, 2, 0, 0}, Coefficient::one());
  table[3].add_term({2, 0, 1, 0}, Coefficient::one());
  table[3].add_term({2, 1, 0, 0}, Coefficient::one());
  table[3].add_term({3, 0, 0, 0}, Coefficient::one());
  return table;
}

NcsfElement expected_ribbon_g3() {
  NcsfElement out(Basis::R);
  out.add_term({3}, q_poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}}));
  out.add_term({2, 1}, q_poly({{1, 1}, {2, 1}, {3, 1}}));
  out.add_term({1, 2}, q_poly({{2, 1}, {3, 1}}));
  out.add_term({1, 1, 1}, Coefficient::q_power(3));
  return out;
}

NcsfElement expected_lambda_g3() {
  NcsfElement out(Basis::L);
  out.add_term({3}, Coefficient(1L));
  out.add_term({2, 1}, Coefficient(-3L));
  out.add_term({1, 2}, Coefficient(-2L));
  out.add_term({1, 1, 1}, Coefficient(5L));
  return out;
}

NcsfElement expected_lambda_g4() {
  NcsfElement out(Basis::L);
  out.add_term({4}, Coefficient(-1L));
  out.add_term({3, 1}, Coefficient(4L));
  out.add_term({2, 2}, Coefficient(3L));
  out.add_term({1, 3}, Coefficient(2L));
  out.add_term({2, 1, 1}, Coefficient(-9L));
  out.add_term({1, 2, 1}, Coefficient(-7L));
  out.add_term({1, 1, 2}, Coefficient(-5L));
  out.add_term({1, 1, 1, 1}, Coefficient(14L));
  return out;
}

/* Binomial-tower polynomials, sizes 0..4.  The size-4 coefficient of
 * S[1,1,1,1] is binom(x+3,4) = (x^4+6x^3+11x^2+6x)/24: its value at x = 1
 * must be the size-4 series coefficient 1, and the word route pins it to
 * binom(x+3,4) via the single word 1234 with four connected factors. */
std::vector<NcsfElement> expected_abel() {
  std::vector<NcsfElement> table(5);
  table[0] = NcsfElement::unit().scaled(x_poly({{0, 1, 1}}));
  table[1].add_term({1}, x_poly({{1, 1, 1}}));

  table[2].add_term({2}, x_poly({{1, 1, 1}}));
  table[2].add_term({1, 1}, x_poly({{2, 1, 2}, {1, 1, 2}}));

  table[3].add_term({3}, x_poly({{1, 1, 1}}));
  table[3].add_term({2, 1}, x_poly({{2, 1, 2}, {1, 3, 2}}));
  table[3].add_term({1, 2}, x_poly({{2, 1, 2}, {1, 1, 2}}));
  table[3].add_term({1, 1, 1}, x_poly({{3, 1, 6}, {2, 3, 6}, {1, 2, 6}}));

  table[4].add_term({4}, x_poly({{1, 1, 1}}));
  table[4].add_term({3, 1}, x_poly({{2, 1, 2}, {1, 5, 2}}));
  table[4].add_term({2, 2}, x_poly({{2, 1, 2}, {1, 3, 2}}));
  table[4].add_term({1, 3}, x_poly({{2, 1, 2}, {1, 1, 2}}));
  table[4].add_term({2, 1, 1}, x_poly({{3, 1, 6}, {2, 6, 6}, {1, 11, 6}}));
  table[4].add_term({1, 2, 1}, x_poly({{3, 1, 6}, {2, 6, 6}, {1, 5, 6}}));
  table[4].add_term({1, 1, 2}, x_poly({{3, 1, 6}, {2, 3, 6}, {1, 2, 6}}));
  table[4].add_term({1, 1, 1, 1}, x_poly({{4, 1, 24}, {3, 6, 24}, {2, 11, 24}, {1, 6, 24}}));
  return table;
}

std::vector<std::vector<long>> expected_gamma_rows(int b) {
  switch (b) {
    case 0:
      return {{1}, {1, 1}, {2, 2, 1}, {5, 5, 3, 1}, {14, 14, 9, 4, 1},
              {42, 42, 28, 14, 5, 1}, {132, 132, 90, 48, 20, 6, 1}};
    case 1:
      return {{1}, {2, 1}, {7, 3, 1}, {28, 12, 4, 1}, {121, 52, 18, 5, 1},
              {550, 237, 84, 25, 6, 1}, {2591, 1119, 403, 125, 33, 7, 1}};
    case 2:
      return {{1}, {3, 1}, {15, 4, 1}, {85, 22, 5, 1}, {519, 132, 30, 6, 1},
              {3330, 837, 190, 39, 7, 1}, {22135, 5516, 1250, 260, 49, 8, 1}};
    case 3:
      return {{1}, {4, 1}, {26, 5, 1}, {192, 35, 6, 1}, {1531, 270, 45, 7, 1},
              {12848, 2215, 362, 56, 8, 1}, {111818, 18961, 3054, 469, 68, 9, 1}};
    default:  // b = -1
      return {{1}, {1}, {1, 1}, {1, 2, 1}, {2, 3, 3, 1}, {4, 6, 6, 4, 1},
              {9, 13, 13, 10, 5, 1}, {21, 30, 30, 24, 15, 6, 1}};
  }
}

std::vector<std::vector<long>> expected_motzkin_returns() {
  return {{1}, {1, 1}, {1, 2, 1}, {2, 3, 3, 1}, {4, 6, 6, 4, 1},
          {9, 13, 13, 10, 5, 1}, {21, 30, 30, 24, 15, 6, 1}};
}

bool rows_equal(const std::vector<Integer>& got, const std::vector<long>& expected) {
  if (got.size() != expected.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != expected[i]) return false;
  return true;
}

/* A = 1 images of the graded (3,2) characteristics, sizes 1..3. */
std::vector<Coefficient> expected_kl32_qseries() {
  return {Coefficient::zero(),
          q_poly({{0, 1}, {1, 1}}),
          q_poly({{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}}),
          q_poly({{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6},
                  {7, 7}, {8, 7}, {9, 7}, {10, 5}, {11, 3}, {12, 1}})};
}

/* ------------------------------------------------------------------ *
 *  checks: frozen tables                                              *
 * ------------------------------------------------------------------ */

CheckOutcome check_charq_classic_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_charq_classic();
  const int top = depth(options, 4);
  for (int n = 0; n <= top; ++n) {
    const NcsfElement got = char_q(ParkingFamily::classic(), n);
    if (got != expected[static_cast<std::size_t>(n)]) {
      log.fail("size " + std::to_string(n) + ": got " + got.to_text() + ", expected " +
               expected[static_cast<std::size_t>(n)].to_text());
    }
  }
  return log.outcome();
}

CheckOutcome check_g_series_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_g_series();
  const int top = depth(options, 4);
  const SolverResult g = solve_g(top);
  for (int n = 0; n <= top; ++n) {
    if (g.at(n) != expected[static_cast<std::size_t>(n)]) {
      log.fail("size " + std::to_string(n) + ": got " + g.at(n).to_text() + ", expected " +
               expected[static_cast<std::size_t>(n)].to_text());
    }
  }
  if (top >= 4) log.note("size-4 coefficient of S[1,3] pinned to 1");
  return log.outcome();
}

CheckOutcome check_commutative_image_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_commutative();
  const int top = depth(options, 4);
  const SolverResult g = solve_g(top);
  for (int n = 0; n <= top; ++n) {
    const auto got = g.at(n).commutative_image();
    if (got != expected[static_cast<std::size_t>(n)]) {
      log.fail("size " + std::to_string(n) + ": commutative image mismatch");
    }
  }
  return log.outcome();
}

CheckOutcome check_k_series_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_k_series();
  const int top = depth(options, 5);
  const XSeries got = solve_k(top);
  for (int d = 0; d <= top; ++d) {
    if (got.at(d) != expected[static_cast<std::size_t>(d)]) {
      log.fail("x-degree " + std::to_string(d) + ": got " + got.at(d).to_text() +
               ", expected " + expected[static_cast<std::size_t>(d)].to_text());
    }
  }
  return log.outcome();
}

CheckOutcome check_f0_series_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_f0_series();
  const int top = depth(options, 3);
  const SolverResult f = solve_f0(top);
  for (int n = 0; n <= top; ++n) {
    if (f.at(n) != expected[static_cast<std::size_t>(n)]) {
      log.fail("size " + std::to_string(n) + ": got " + f.at(n).to_text() + ", expected " +
               expected[static_cast<std::size_t>(n)].to_text());
    }
  }
  return log.outcome();
}

CheckOutcome check_ribbon_g3_table(const VerifyOptions& options) {
  CheckLog log;
  if (depth(options, 3) >= 3) {
    const NcsfElement got = char_q(ParkingFamily::classic(), 3).to_basis(Basis::R);
    const NcsfElement expected = expected_ribbon_g3();
    if (got != expected)
      log.fail("got " + got.to_text() + ", expected " + expected.to_text());
  }
  return log.outcome();
}

CheckOutcome check_lambda_g34_table(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 4);
  const SolverResult g = solve_g(top);
  if (top >= 3) {
    const NcsfElement got = g.at(3).to_basis(Basis::L);
    if (got != expected_lambda_g3())
      log.fail("size 3: got " + got.to_text() + ", expected " + expected_lambda_g3().to_text());
  }
  if (top >= 4) {
    const NcsfElement got = g.at(4).to_basis(Basis::L);
    if (got != expected_lambda_g4())
      log.fail("size 4: got " + got.to_text() + ", expected " + expected_lambda_g4().to_text());
  }
  return log.outcome();
}

CheckOutcome check_delta_point_values(const VerifyOptions& options) {
  CheckLog log;
  if (depth(options, 7) >= 7 && delta_b({3, 1, 2, 1}, 0) != 16)
    log.fail("delta of [3,1,2,1] at b=0: expected 16, got " + delta_b({3, 1, 2, 1}, 0).get_str());
  if (depth(options, 6) >= 6 && delta_b({1, 3, 1, 1}, 1) != 34)
    log.fail("delta of [1,3,1,1] at b=1: expected 34, got " + delta_b({1, 3, 1, 1}, 1).get_str());
  for (int n = 1; n <= depth(options, 7); ++n) {
    for (int b : {-1, 0, 1, 2, 5}) {
      if (delta_b({n}, b) != 1)
        log.fail("delta of the single part " + std::to_string(n) + " at b=" + std::to_string(b) +
                 " is not 1");
    }
  }
  return log.outcome();
}

CheckOutcome check_gamma_triangle_tables(const VerifyOptions& options) {
  CheckLog log;
  for (int b : {0, 1, 2, 3}) {
    const auto expected = expected_gamma_rows(b);
    const int rows = std::min<int>(depth(options, 7), static_cast<int>(expected.size()));
    if (rows <= 0) continue;
    const auto got = gamma_triangle(b, rows);
    for (int n = 1; n <= rows; ++n) {
      if (!rows_equal(got[static_cast<std::size_t>(n - 1)],
                      expected[static_cast<std::size_t>(n - 1)])) {
        log.fail("b=" + std::to_string(b) + " row " + std::to_string(n) + ": got " +
                 row_text(got[static_cast<std::size_t>(n - 1)]));
      }
    }
  }
  {
    const auto expected = expected_gamma_rows(-1);
    const int rows = std::min<int>(depth(options, 8), static_cast<int>(expected.size()));
    if (rows > 0) {
      const auto got = gamma_triangle(-1, rows);
      for (int n = 1; n <= rows; ++n) {
        if (!rows_equal(got[static_cast<std::size_t>(n - 1)],
                        expected[static_cast<std::size_t>(n - 1)])) {
          log.fail("b=-1 row " + std::to_string(n) + ": got " +
                   row_text(got[static_cast<std::size_t>(n - 1)]));
        }
      }
    }
  }
  return log.outcome();
}

CheckOutcome check_motzkin_returns_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_motzkin_returns();
  const int rows = std::min<int>(depth(options, 7), static_cast<int>(expected.size()));
  if (rows <= 0) return log.outcome();
  const auto got = motzkin_returns_triangle(rows);
  for (int n = 1; n <= rows; ++n) {
    if (!rows_equal(got[static_cast<std::size_t>(n - 1)],
                    expected[static_cast<std::size_t>(n - 1)])) {
      log.fail("row " + std::to_string(n) + ": got " +
               row_text(got[static_cast<std::size_t>(n - 1)]));
    }
  }
  return log.outcome();
}

CheckOutcome check_row_sum_series(const VerifyOptions& options) {
  CheckLog log;
  const std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const std::vector<long> schroeder = {1, 1, 3, 11, 45, 197, 903, 4279, 20793};
  const std::vector<long> motzkin_shifted = {1, 1, 1, 2, 4, 9, 21, 51, 127, 323};
  const auto compare = [&log](int b, const std::vector<long>& expected, int top) {
    if (top < 0) return;
    const auto got = row_sum_series(b, top);
    for (int n = 0; n <= top; ++n) {
      if (got[static_cast<std::size_t>(n)] != expected[static_cast<std::size_t>(n)]) {
        log.fail("b=" + std::to_string(b) + " degree " + std::to_string(n) + ": got " +
                 got[static_cast<std::size_t>(n)].get_str() + ", expected " +
                 std::to_string(expected[static_cast<std::size_t>(n)]));
      }
    }
  };
  compare(0, catalan, std::min(depth(options, 10), static_cast<int>(catalan.size()) - 1));
  compare(1, schroeder, std::min(depth(options, 8), static_cast<int>(schroeder.size()) - 1));
  compare(-1, motzkin_shifted,
          std::min(depth(options, 9), static_cast<int>(motzkin_shifted.size()) - 1));
  return log.outcome();
}

CheckOutcome check_abel_display_table(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_abel();
  const int top = depth(options, 4);
  for (int n = 0; n <= top; ++n) {
    const NcsfElement got = abel_polynomial(n);
    if (got != expected[static_cast<std::size_t>(n)]) {
      log.fail("size " + std::to_string(n) + ": got " + got.to_text() + ", expected " +
               expected[static_cast<std::size_t>(n)].to_text());
    }
  }
  if (top >= 4) log.note("size-4 coefficient of S[1,1,1,1] pinned to binom(x+3,4)");
  return log.outcome();
}

CheckOutcome check_kl_closed_counts(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 6);
  const std::vector<long> frozen32 = {1, 2, 9, 52};
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
    const KlQuotient quotient = quotient_kl(k, l, top, /*q_mode=*/false);
    for (int n = 0; n <= top; ++n) {
      Rational got;
      if (!constant_value(quotient.normalized.at(n).specialize_one(), got)) {
        log.fail("(" + std::to_string(k) + "," + std::to_string(l) + ") size " +
                 std::to_string(n) + ": all-ones image is not constant");
        continue;
      }
      Rational expected = Rational(integer_binomial(Integer(n * k + l + n - 1),
                                                    static_cast<unsigned long>(n))) *
                          Rational(l) / Rational(n * k + l);
      expected.canonicalize();
      if (got != expected) {
        log.fail("(" + std::to_string(k) + "," + std::to_string(l) + ") size " +
                 std::to_string(n) + ": all-ones count mismatch");
      }
      if (k == 3 && l == 2 && n < static_cast<int>(frozen32.size()) &&
          got != frozen32[static_cast<std::size_t>(n)]) {
        log.fail("(3,2) size " + std::to_string(n) + ": expected " +
                 std::to_string(frozen32[static_cast<std::size_t>(n)]));
      }
    }
  }
  return log.outcome();
}

CheckOutcome check_kl32_qseries(const VerifyOptions& options) {
  CheckLog log;
  const auto expected = expected_kl32_qseries();
  const int top = depth(options, 3);
  for (int n = 1; n <= top; ++n) {
    const Coefficient got = char_q(ParkingFamily::arithmetic(3, 2), n).specialize_one();
    if (got != expected[static_cast<std::size_t>(n)]) {
      log.fail("size " + std::to_string(n) + ": enumerated series " + got.to_text() +
               ", expected " + expected[static_cast<std::size_t>(n)].to_text());
    }
  }
  if (top >= 1) {
    const KlQuotient quotient = quotient_kl(3, 2, top, /*q_mode=*/true);
    std::ostringstream inferred;
    std::ostringstream triangular;
    std::ostringstream shifted;
    for (int n = 1; n <= top; ++n) {
      if (!quotient.normalization.matched[static_cast<std::size_t>(n)]) {
        log.fail("size " + std::to_string(n) + ": ratio did not align with the enumeration");
        continue;
      }
      const Coefficient got = quotient.normalized.at(n).specialize_one();
      if (got != expected[static_cast<std::size_t>(n)]) {
        log.fail("size " + std::to_string(n) + ": normalized ratio series " + got.to_text());
      }
      inferred << (n > 1 ? "," : "") << quotient.normalization.inferred[static_cast<std::size_t>(n)];
      triangular << (n > 1 ? "," : "")
                 << quotient.normalization.triangular[static_cast<std::size_t>(n)];
      shifted << (n > 1 ? "," : "")
              << quotient.normalization.triangular_shifted[static_cast<std::size_t>(n)];
    }
    log.note("inferred q-exponents " + inferred.str() + "; -k*binom(n+1,2) gives " +
             triangular.str() + "; the further -n(nk+l) shift gives " + shifted.str());
  }
  return log.outcome();
}

CheckOutcome check_iota_worked_example(const VerifyOptions& options) {
  CheckLog log;
  if (depth(options, 9) < 9) return log.outcome();
  const GenComposition input = {2, 1, 1, 0, 1, 2, 0, 2, 0, 0};
  const GenComposition expected = {1, 2, 0, 5, 0, 0, 1, 0, 0, 0};
  const GenComposition got = iota(input);
  if (got != expected)
    log.fail("iota image " + ints_text(got) + ", expected " + ints_text(expected));
  if (iota(got) != input) log.fail("iota does not return to the input");
  if (corresponding_composition(got) != conjugate(corresponding_composition(input)))
    log.fail("conjugate composition mismatch");
  return log.outcome();
}

/* ------------------------------------------------------------------ *
 *  checks: oracles                                                    *
 * ------------------------------------------------------------------ */

CheckOutcome check_g_solver_matches_enumeration(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 6);
  const SolverResult g = solve_g(top);
  for (int n = 0; n <= top; ++n) {
    if (g.at(n) != char_q(ParkingFamily::classic(), n).eval_q_one())
      log.fail("size " + std::to_string(n) + ": solver and enumeration disagree");
  }
  return log.outcome();
}

CheckOutcome check_quotient_matches_enumeration(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 6);
  std::vector<NcsfElement> reference;
  for (int n = 0; n <= top; ++n) reference.push_back(char_q(ParkingFamily::classic(), n));
  for (int r : {1, 2, 3}) {
    const SolverResult quotient = quotient_g(r, top);
    for (int n = 0; n <= top; ++n) {
      if (quotient.at(n) != reference[static_cast<std::size_t>(n)]) {
        log.fail("r=" + std::to_string(r) + " size " + std::to_string(n) + ": got " +
                 quotient.at(n).to_text());
      }
    }
  }
  return log.outcome();
}

CheckOutcome check_h_is_negated_g(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 6);
  const SolverResult g = solve_g(top);
  const SolverResult h = solve_h(top);
  for (int n = 0; n <= top; ++n) {
    if (h.at(n) != g.at(n).alphabet_negate())
      log.fail("size " + std::to_string(n) + ": mismatch");
  }
  return log.outcome();
}

CheckOutcome check_f0_matches_dyck_oracle(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 8);
  const SolverResult f = solve_f0(top);
  for (int n = 0; n <= top; ++n) {
    const auto oracle = dyck_decomposition_oracle(n);
    const auto& terms = f.at(n).terms();
    if (terms.size() != oracle.size()) {
      log.fail("size " + std::to_string(n) + ": " + std::to_string(terms.size()) +
               " keys vs oracle " + std::to_string(oracle.size()));
      continue;
    }
    for (const auto& [key, coeff] : terms) {
      const auto it = oracle.find(key);
      if (it == oracle.end()) {
        log.fail("size " + std::to_string(n) + ": key " + ints_text(key) +
                 " missing from the oracle");
      } else if (it->second != 1 || !coeff.is_one()) {
        log.fail("size " + std::to_string(n) + ": key " + ints_text(key) +
                 " carries a multiplicity other than 1");
      }
    }
  }
  return log.outcome();
}

CheckOutcome check_trees_match_delta(const VerifyOptions& options) {
  CheckLog log;
  for (int b : {0, 1, 2}) {
    for (int n = 1; n <= depth(options, 7); ++n) {
      std::map<Composition, Integer> expected;
      for (const Composition& comp : compositions_of(n)) {
        const Integer value = delta_b(comp, b);
        if (value != 0) expected.emplace(comp, value);
      }
      if (enumerate_trees_by_composition(n, b) != expected)
        log.fail("b=" + std::to_string(b) + " weight " + std::to_string(n) +
                 ": enumeration disagrees with the ballot sum");
    }
  }
  const int top = depth(options, 7);
  const SolverResult g = solve_g(top);
  const SolverResult lam = solve_b_family(1, top);
  for (int n = 1; n <= top; ++n) {
    for (const Composition& comp : compositions_of(n)) {
      if (g.at(n).coefficient(comp) != Coefficient(Rational(delta_b(comp, 0))))
        log.fail("solver coefficient of " + ints_text(comp) + " differs from b=0 ballot sum");
      if (lam.at(n).coefficient(comp) != Coefficient(Rational(delta_b(comp, 1))))
        log.fail("b=1 solver coefficient of " + ints_text(comp) + " differs from ballot sum");
    }
  }
  return log.outcome();
}

CheckOutcome check_abel_word_route(const VerifyOptions& options) {
  CheckLog log;
  for (int n = 0; n <= depth(options, 7); ++n) {
    if (abel_via_ndpf(n) != abel_polynomial(n))
      log.fail("size " + std::to_string(n) + ": word route disagrees");
  }
  return log.outcome();
}

CheckOutcome check_abel_one_three_ways(const VerifyOptions& options) {
  CheckLog log;
  for (int n = 0; n <= depth(options, 10); ++n) {
    const Coefficient direct = abel_polynomial(n).specialize_one();
    Coefficient sum;
    if (n == 0) {
      sum = Coefficient::one();
    } else {
      for (int k = 1; k <= n; ++k) {
        sum += rising_poly(static_cast<unsigned long>(k))
                   .scaled(Rational(catalan_triangle_c(n, k)));
      }
    }
    const Coefficient closed = abel_one_closed_form(n);
    if (direct != closed)
      log.fail("size " + std::to_string(n) + ": direct image " + direct.to_text() +
               " vs closed form " + closed.to_text());
    if (sum != closed)
      log.fail("size " + std::to_string(n) + ": triangle sum " + sum.to_text() +
               " vs closed form " + closed.to_text());
  }
  return log.outcome();
}

CheckOutcome check_abel_generating_function(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 8);
  if (top < 0) return log.outcome();
  std::vector<Rational> catalan(static_cast<std::size_t>(top) + 1, Rational(0));
  for (int m = 0; m <= top; ++m) {
    catalan[static_cast<std::size_t>(m)] =
        Rational(integer_binomial(Integer(2 * m), static_cast<unsigned long>(m))) /
        Rational(m + 1);
    catalan[static_cast<std::size_t>(m)].canonicalize();
  }
  std::vector<Coefficient> values;
  for (int n = 0; n <= top; ++n) values.push_back(abel_polynomial(n).specialize_one());
  for (long x = 1; x <= 3; ++x) {
    std::vector<Rational> power(static_cast<std::size_t>(top) + 1, Rational(0));
    power[0] = Rational(1);
    for (long i = 0; i < x; ++i) power = series_mul_trunc(power, catalan, top);
    for (int n = 0; n <= top; ++n) {
      Rational got;
      if (!constant_value(values[static_cast<std::size_t>(n)].eval_x(Integer(x)), got)) {
        log.fail("x=" + std::to_string(x) + " size " + std::to_string(n) +
                 ": non-constant value");
        continue;
      }
      if (got != power[static_cast<std::size_t>(n)])
        log.fail("x=" + std::to_string(x) + " size " + std::to_string(n) +
                 ": value differs from the Catalan-series power");
    }
  }
  return log.outcome();
}

CheckOutcome check_kl_brute_force_counts(const VerifyOptions& options) {
  CheckLog log;
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
    const ParkingFamily family = ParkingFamily::arithmetic(k, l);
    for (int n = 0; n <= depth(options, 4); ++n) {
      const Integer brute = count_all(family, n);
      const Integer closed = count_closed_form(family, n);
      const Integer direct = (n == 0) ? Integer(1) : Integer(l) * integer_power(l + k * n, n - 1);
      if (brute != closed || brute != direct) {
        log.fail("(" + std::to_string(k) + "," + std::to_string(l) + ") size " +
                 std::to_string(n) + ": counts " + brute.get_str() + " / " + closed.get_str() +
                 " / " + direct.get_str() + " disagree");
      }
    }
  }
  if (depth(options, 2) >= 2 && count_all(ParkingFamily::shifted(2), 2) != 8)
    log.fail("shifted family with offset 2, size 2: expected 8 words");
  return log.outcome();
}

CheckOutcome check_kl_quotient_matches_enumeration(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 4);
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}}) {
    const ParkingFamily family = ParkingFamily::arithmetic(k, l);
    std::vector<NcsfElement> reference;
    for (int n = 0; n <= top; ++n) reference.push_back(char_q(family, n));
    const std::string label = "(" + std::to_string(k) + "," + std::to_string(l) + ")";

    const KlQuotient plain = quotient_kl(k, l, top, /*q_mode=*/false);
    const KlQuotient plain_shifted_r = quotient_kl(k, l, top, /*q_mode=*/false, l + 2);
    for (int n = 0; n <= top; ++n) {
      if (plain.normalized.at(n) != reference[static_cast<std::size_t>(n)].eval_q_one())
        log.fail(label + " q=1 size " + std::to_string(n) + ": ratio disagrees");
      if (plain_shifted_r.normalized.at(n) != plain.normalized.at(n))
        log.fail(label + " q=1 size " + std::to_string(n) + ": result depends on r");
    }

    const KlQuotient graded = quotient_kl(k, l, top, /*q_mode=*/true);
    const KlQuotient graded_shifted_r = quotient_kl(k, l, top, /*q_mode=*/true, l + 2);
    for (int n = 0; n <= top; ++n) {
      if (!graded.normalization.matched[static_cast<std::size_t>(n)] ||
          graded.normalized.at(n) != reference[static_cast<std::size_t>(n)]) {
        log.fail(label + " graded size " + std::to_string(n) + ": ratio disagrees");
      }
      if (graded_shifted_r.normalized.at(n) != graded.normalized.at(n))
        log.fail(label + " graded size " + std::to_string(n) + ": result depends on r");
    }
  }
  return log.outcome();
}

CheckOutcome check_gamma_vertex_counts(const VerifyOptions& options) {
  CheckLog log;
  for (int n = 1; n <= depth(options, 7); ++n) {
    for (const Composition& comp : compositions_of(n)) {
      const GammaGraph graph = build_gamma(comp);
      if (Integer(static_cast<long>(graph.vertices.size())) != delta_b(comp, 0)) {
        log.fail(ints_text(comp) + ": " + std::to_string(graph.vertices.size()) +
                 " vertices vs coefficient " + delta_b(comp, 0).get_str());
        continue;
      }
      std::map<GenComposition, int> indegree;
      std::map<GenComposition, int> outdegree;
      for (const GenComposition& vertex : graph.vertices) {
        indegree[vertex] = 0;
        outdegree[vertex] = 0;
      }
      for (const GammaEdge& edge : graph.edges) {
        ++outdegree[edge.from];
        ++indegree[edge.to];
      }
      std::vector<GenComposition> sources;
      std::vector<GenComposition> sinks;
      for (const GenComposition& vertex : graph.vertices) {
        if (indegree[vertex] == 0) sources.push_back(vertex);
        if (outdegree[vertex] == 0) sinks.push_back(vertex);
      }
      if (sources.size() != 1 || sources[0] != expected_source(comp))
        log.fail(ints_text(comp) + ": source is not the zero-padded layout");
      if (sinks.size() != 1 || sinks[0] != expected_sink(comp))
        log.fail(ints_text(comp) + ": sink is not the spread-out layout");
    }
  }
  return log.outcome();
}

CheckOutcome check_motzkin_bijection(const VerifyOptions& options) {
  CheckLog log;
  const std::vector<std::size_t> counts = {1, 1, 2, 4, 9, 21, 51, 127};
  for (int n = 0; n <= depth(options, 7); ++n) {
    const auto paths = enumerate_motzkin(n);
    if (paths.size() != counts[static_cast<std::size_t>(n)]) {
      log.fail("length " + std::to_string(n) + ": " + std::to_string(paths.size()) + " paths");
      continue;
    }
    for (const std::string& path : paths) {
      const OrderedTree tree = motzkin_to_tree(path);
      if (tree_to_motzkin(tree) != path) {
        log.fail("path " + (path.empty() ? std::string("(empty)") : path) +
                 " does not round-trip");
        continue;
      }
      if (weight(tree_composition(tree, -1)) != n + 1)
        log.fail("path " + path + ": image weight is not length + 1");
    }
  }
  const int bridge = depth(options, 8);
  if (bridge >= 1) {
    const auto returns = motzkin_returns_triangle(bridge);
    const auto gamma = gamma_triangle(-1, bridge + 1);
    for (int n = 1; n <= bridge; ++n) {
      if (returns[static_cast<std::size_t>(n - 1)] != gamma[static_cast<std::size_t>(n)])
        log.fail("returns row " + std::to_string(n) + " differs from the b=-1 row " +
                 std::to_string(n + 1));
    }
  }
  return log.outcome();
}

CheckOutcome check_specialization_fixed_points(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 8);
  if (top < 0) return log.outcome();
  const SolverResult g = solve_g(top);

  /* T(t) = sum of the exponential images satisfies T = exp(tT). */
  std::vector<Rational> t_series(static_cast<std::size_t>(top) + 1, Rational(0));
  for (int n = 0; n <= top; ++n)
    t_series[static_cast<std::size_t>(n)] = rational_at_x(g.at(n).specialize_exp(), n);
  std::vector<Rational> shifted(static_cast<std::size_t>(top) + 1, Rational(0));
  for (int n = 1; n <= top; ++n)
    shifted[static_cast<std::size_t>(n)] = t_series[static_cast<std::size_t>(n - 1)];
  std::vector<Rational> exp_series(static_cast<std::size_t>(top) + 1, Rational(0));
  std::vector<Rational> power(static_cast<std::size_t>(top) + 1, Rational(0));
  power[0] = Rational(1);
  Rational inv_factorial(1);
  for (int m = 0; m <= top; ++m) {
    if (m > 0) {
      power = series_mul_trunc(power, shifted, top);
      inv_factorial /= Rational(m);
    }
    for (int n = 0; n <= top; ++n)
      exp_series[static_cast<std::size_t>(n)] += inv_factorial * power[static_cast<std::size_t>(n)];
  }
  for (int n = 0; n <= top; ++n) {
    if (t_series[static_cast<std::size_t>(n)] != exp_series[static_cast<std::size_t>(n)])
      log.fail("exponential fixed point fails at degree " + std::to_string(n));
  }

  /* G(z) from the binomial images satisfies G = (1 - zG)^{-alpha}. */
  for (long alpha : {1L, 2L, 3L}) {
    std::vector<Rational> g_series(static_cast<std::size_t>(top) + 1, Rational(0));
    for (int n = 0; n <= top; ++n)
      g_series[static_cast<std::size_t>(n)] = rational_at_x(g.at(n).specialize_binomial(alpha), n);
    std::vector<Rational> zg(static_cast<std::size_t>(top) + 1, Rational(0));
    for (int n = 1; n <= top; ++n)
      zg[static_cast<std::size_t>(n)] = g_series[static_cast<std::size_t>(n - 1)];
    std::vector<Rational> rhs(static_cast<std::size_t>(top) + 1, Rational(0));
    std::vector<Rational> zg_power(static_cast<std::size_t>(top) + 1, Rational(0));
    zg_power[0] = Rational(1);
    for (int m = 0; m <= top; ++m) {
      if (m > 0) zg_power = series_mul_trunc(zg_power, zg, top);
      const Rational binom(integer_binomial(Integer(alpha + m - 1),
                                            static_cast<unsigned long>(m)));
      for (int n = 0; n <= top; ++n)
        rhs[static_cast<std::size_t>(n)] += binom * zg_power[static_cast<std::size_t>(n)];
    }
    for (int n = 0; n <= top; ++n) {
      if (g_series[static_cast<std::size_t>(n)] != rhs[static_cast<std::size_t>(n)])
        log.fail("binomial fixed point (alpha=" + std::to_string(alpha) + ") fails at degree " +
                 std::to_string(n));
    }
  }
  return log.outcome();
}

CheckOutcome check_shuffle_identity(const VerifyOptions& options) {
  CheckLog log;
  for (int r : {1, 2}) {
    for (int n = 0; n <= depth(options, 5); ++n) {
      const NcsfElement lhs = NcsfElement::s_generator(n).alphabet_q_interval(n + r);
      NcsfElement rhs;
      for (int k = 0; k <= n; ++k) {
        const NcsfElement tail =
            NcsfElement::s_generator(n - k).alphabet_q_interval(n + r - k - 1);
        rhs += (char_q(ParkingFamily::classic(), k) * tail)
                   .scaled(Coefficient::q_power(static_cast<long>(k + 1) * (n - k)));
      }
      if (lhs != rhs)
        log.fail("r=" + std::to_string(r) + " size " + std::to_string(n) + ": sides differ");
    }
  }
  return log.outcome();
}

/* ------------------------------------------------------------------ *
 *  checks: involutions                                                *
 * ------------------------------------------------------------------ */

CheckOutcome check_nu_ribbon_lemma(const VerifyOptions& options) {
  CheckLog log;
  for (int n = 1; n <= depth(options, 7); ++n) {
    for (const Composition& comp : compositions_of(n)) {
      const NcsfElement lhs = NcsfElement::from_key(Basis::R, comp).to_basis(Basis::S).nu();
      const long sign = (comp.size() % 2 == 1) ? 1 : -1;
      const NcsfElement rhs = NcsfElement::from_key(Basis::L, conjugate(comp))
                                  .to_basis(Basis::S)
                                  .scaled(Coefficient(sign));
      if (lhs != rhs) log.fail("composition " + ints_text(comp));
    }
  }
  return log.outcome();
}

CheckOutcome check_nu_fixes_g(const VerifyOptions& options) {
  CheckLog log;
  const int top = depth(options, 7);
  const SolverResult g = solve_g(top);
  for (int n = 0; n <= top; ++n) {
    if (g.at(n).nu() != g.at(n)) log.fail("size " + std::to_string(n));
  }
  return log.outcome();
}

CheckOutcome check_iota_involution_sweep(const VerifyOptions& options) {
  CheckLog log;
  for (int n = 1; n <= depth(options, 8); ++n) {
    for (const Word& word : enumerate_nondecreasing(ParkingFamily::classic(), n)) {
      const GenComposition vertex = evaluation(word, n + 1);
      if (!is_parking_type(vertex)) {
        log.fail(ints_text(vertex) + " is not parking type");
        continue;
      }
      const GenComposition image = iota(vertex);
      if (!is_parking_type(image))
        log.fail("iota image " + ints_text(image) + " is not parking type");
      if (iota(image) != vertex) log.fail("iota^2 moves " + ints_text(vertex));
      if (corresponding_composition(image) != conjugate(corresponding_composition(vertex)))
        log.fail("conjugate mismatch at " + ints_text(vertex));
    }
  }
  return log.outcome();
}

CheckOutcome check_gamma_isomorphism(const VerifyOptions& options) {
  CheckLog log;
  for (int n = 1; n <= depth(options, 6); ++n) {
    for (const Composition& comp : compositions_of(n)) {
      const IsoCertificate cert = conjugacy_isomorphism(comp);
      if (!cert.valid) log.fail(ints_text(comp) + ": " + cert.detail);
    }
  }
  return log.outcome();
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> registry = {
      {"charq-classic-table", "paper-tables", 1, check_charq_classic_table},
      {"g-series-table", "paper-tables", 2, check_g_series_table},
      {"g-solver-matches-enumeration", "oracles", 2, check_g_solver_matches_enumeration},
      {"commutative-image-table", "paper-tables", 3, check_commutative_image_table},
      {"k-series-table", "paper-tables", 4, check_k_series_table},
      {"f0-series-table", "paper-tables", 5, check_f0_series_table},
      {"f0-matches-dyck-oracle", "oracles", 5, check_f0_matches_dyck_oracle},
      {"quotient-matches-enumeration", "oracles", 6, check_quotient_matches_enumeration},
      {"h-is-negated-g", "oracles", 7, check_h_is_negated_g},
      {"ribbon-g3-table", "paper-tables", 8, check_ribbon_g3_table},
      {"lambda-g34-table", "paper-tables", 8, check_lambda_g34_table},
      {"nu-ribbon-lemma", "involutions", 8, check_nu_ribbon_lemma},
      {"nu-fixes-g", "involutions", 8, check_nu_fixes_g},
      {"delta-point-values", "paper-tables", 9, check_delta_point_values},
      {"trees-match-delta", "oracles", 9, check_trees_match_delta},
      {"gamma-triangle-tables", "paper-tables", 10, check_gamma_triangle_tables},
      {"motzkin-returns-table", "paper-tables", 10, check_motzkin_returns_table},
      {"row-sum-series-values", "paper-tables", 10, check_row_sum_series},
      {"motzkin-bijection", "oracles", 10, check_motzkin_bijection},
      {"abel-display-table", "paper-tables", 11, check_abel_display_table},
      {"abel-word-route", "oracles", 11, check_abel_word_route},
      {"abel-one-three-ways", "oracles", 11, check_abel_one_three_ways},
      {"abel-generating-function", "oracles", 11, check_abel_generating_function},
      {"kl-brute-force-counts", "oracles", 12, check_kl_brute_force_counts},
      {"kl-closed-form-counts", "paper-tables", 12, check_kl_closed_counts},
      {"kl-32-q-series", "paper-tables", 12, check_kl32_qseries},
      {"kl-quotient-matches-enumeration", "oracles", 12, check_kl_quotient_matches_enumeration},
      {"iota-worked-example", "paper-tables", 13, check_iota_worked_example},
      {"iota-involution-sweep", "involutions", 13, check_iota_involution_sweep},
      {"gamma-isomorphism-certificates", "involutions", 13, check_gamma_isomorphism},
      {"gamma-vertex-counts", "oracles", 13, check_gamma_vertex_counts},
      {"specialization-fixed-points", "oracles", 14, check_specialization_fixed_points},
      {"shuffle-identity", "oracles", 14, check_shuffle_identity},
  };
  return registry;
}

std::vector<CheckResult> run_checks(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (const Check& check : all_checks()) {
    if (suite != "all" && suite != check.suite) continue;
    CheckResult result;
    result.id = check.id;
    result.suite = check.suite;
    result.criterion = check.criterion;
    const auto start = std::chrono::steady_clock::now();
    try {
      const CheckOutcome outcome = check.run(options);
      result.pass = outcome.pass;
      result.detail = outcome.detail;
    } catch (const std::exception& error) {
      result.pass = false;
      result.detail = std::string("exception: ") + error.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    result.milliseconds =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
            .count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace ncinvert
