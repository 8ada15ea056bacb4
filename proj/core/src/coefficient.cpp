#include "ncinvert/coefficient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncinvert {

Coefficient::Coefficient(Rational value) {
  if (value != 0) terms_[{0, 0}] = std::move(value);
}

Coefficient::Coefficient(long value) : Coefficient(Rational(value)) {}

Coefficient Coefficient::zero() { return Coefficient(); }

Coefficient Coefficient::one() { return Coefficient(1L); }

Coefficient Coefficient::monomial(long q_exp, long x_exp, Rational value) {
  Coefficient c;
  c.add_term(q_exp, x_exp, value);
  return c;
}

Coefficient Coefficient::q_power(long e) { return monomial(e, 0, Rational(1)); }

Coefficient Coefficient::x_power(long e) { return monomial(0, e, Rational(1)); }

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second == 1;
}

void Coefficient::add_term(long q_exp, long x_exp, const Rational& value) {
  if (x_exp < 0) throw std::invalid_argument("Coefficient: negative x exponent");
  // GMP rational arithmetic assumes canonical form; canonicalize on entry so
  // values built as num/den pairs compare correctly later.
  Rational canon = value;
  canon.canonicalize();
  if (canon == 0) return;
  const Key key{q_exp, x_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(canon));
  } else {
    it->second += canon;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  for (const auto& [key, value] : rhs.terms_) add_term(key.first, key.second, value);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  for (const auto& [key, value] : rhs.terms_) add_term(key.first, key.second, Rational(-value));
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient result;
  for (const auto& [key, value] : terms_) result.terms_.emplace(key, Rational(-value));
  return result;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient result;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      result.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  }
  return result;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  *this = *this * rhs;
  return *this;
}

Coefficient Coefficient::scaled(const Rational& factor) const {
  Coefficient result;
  if (factor == 0) return result;
  for (const auto& [key, value] : terms_) result.terms_.emplace(key, value * factor);
  return result;
}

Coefficient Coefficient::times_q_power(long e) const {
  Coefficient result;
  for (const auto& [key, value] : terms_) result.terms_.emplace(Key{key.first + e, key.second}, value);
  return result;
}

Coefficient Coefficient::times_x_power(long e) const {
  Coefficient result;
  for (const auto& [key, value] : terms_) {
    if (key.second + e < 0) throw std::invalid_argument("times_x_power: negative x exponent");
    result.terms_.emplace(Key{key.first, key.second + e}, value);
  }
  return result;
}

Coefficient Coefficient::subst_q_inverse() const {
  Coefficient result;
  for (const auto& [key, value] : terms_) result.terms_.emplace(Key{-key.first, key.second}, value);
  return result;
}

Coefficient Coefficient::eval_q_one() const {
  Coefficient result;
  for (const auto& [key, value] : terms_) result.add_term(0, key.second, value);
  return result;
}

Coefficient Coefficient::eval_x(const Integer& value) const {
  Coefficient result;
  for (const auto& [key, coeff] : terms_) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(key.second));
    result.add_term(key.first, 0, coeff * Rational(power));
  }
  return result;
}

Rational Coefficient::eval_all_one() const {
  Rational sum = 0;
  for (const auto& [key, value] : terms_) sum += value;
  return sum;
}

Coefficient Coefficient::truncate_x(long bound) const {
  Coefficient result;
  for (const auto& [key, value] : terms_) {
    if (key.second <= bound) result.terms_.emplace(key, value);
  }
  return result;
}

bool Coefficient::is_q_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first == 0; });
}

bool Coefficient::is_x_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.second == 0; });
}

long Coefficient::min_q_exp() const {
  if (is_zero()) throw std::logic_error("min_q_exp of zero");
  long m = terms_.begin()->first.first;
  for (const auto& [key, value] : terms_) m = std::min(m, key.first);
  return m;
}

long Coefficient::max_q_exp() const {
  if (is_zero()) throw std::logic_error("max_q_exp of zero");
  long m = terms_.begin()->first.first;
  for (const auto& [key, value] : terms_) m = std::max(m, key.first);
  return m;
}

long Coefficient::max_x_exp() const {
  if (is_zero()) throw std::logic_error("max_x_exp of zero");
  long m = 0;
  for (const auto& [key, value] : terms_) m = std::max(m, key.second);
  return m;
}

namespace {

void append_power(std::ostringstream& out, const char* symbol, long exp, bool& first_factor) {
  if (exp == 0) return;
  if (!first_factor) out << "·";
  first_factor = false;
  out << symbol;
  if (exp != 1) out << "^" << exp;
}

}  // namespace

std::string Coefficient::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (const auto& [key, value] : terms_) {
    Rational magnitude = value;
    const bool negative = value < 0;
    if (negative) magnitude = -magnitude;
    if (first_term) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first_term = false;
    const bool has_vars = key.first != 0 || key.second != 0;
    bool first_factor = true;
    if (magnitude != 1 || !has_vars) {
      out << magnitude.get_str();
      first_factor = false;
    }
    append_power(out, "q", key.first, first_factor);
    append_power(out, "x", key.second, first_factor);
  }
  return out.str();
}

Coefficient binomial_poly(unsigned long m) { return shifted_binomial_poly(0, m); }

Coefficient shifted_binomial_poly(long shift, unsigned long m) {
  // (x + shift)(x + shift - 1)...(x + shift - m + 1) / m!
  Coefficient result = Coefficient::one();
  for (unsigned long i = 0; i < m; ++i) {
    Coefficient linear = Coefficient::x_power(1);
    linear += Coefficient(Rational(shift - static_cast<long>(i)));
    result *= linear;
  }
  return result.scaled(Rational(1) / Rational(factorial(m)));
}

Coefficient rising_poly(unsigned long k) { return shifted_binomial_poly(static_cast<long>(k) - 1, k); }

}  // namespace ncinvert
