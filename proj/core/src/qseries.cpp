#include "ncinvert/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ncinvert {

QSeriesTrunc::QSeriesTrunc(long order) : order_(order) {}

QSeriesTrunc QSeriesTrunc::zero(long order) { return QSeriesTrunc(order); }

QSeriesTrunc QSeriesTrunc::one(long order) {
  QSeriesTrunc s(order);
  s.add_term(0, Rational(1));
  return s;
}

QSeriesTrunc QSeriesTrunc::from_coefficient(const Coefficient& c, long order) {
  if (!c.is_x_free()) throw std::invalid_argument("QSeriesTrunc: coefficient involves x");
  QSeriesTrunc s(order);
  for (const auto& [key, value] : c.terms()) s.add_term(key.first, value);
  return s;
}

long QSeriesTrunc::floor_exp() const { return terms_.empty() ? order_ : terms_.begin()->first; }

Rational QSeriesTrunc::at(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSeriesTrunc::add_term(long exp, const Rational& value) {
  if (exp >= order_ || value == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, value);
  } else {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

QSeriesTrunc& QSeriesTrunc::operator+=(const QSeriesTrunc& rhs) {
  order_ = std::min(order_, rhs.order_);
  std::erase_if(terms_, [&](const auto& t) { return t.first >= order_; });
  for (const auto& [exp, value] : rhs.terms_) add_term(exp, value);
  return *this;
}

QSeriesTrunc& QSeriesTrunc::operator-=(const QSeriesTrunc& rhs) {
  order_ = std::min(order_, rhs.order_);
  std::erase_if(terms_, [&](const auto& t) { return t.first >= order_; });
  for (const auto& [exp, value] : rhs.terms_) add_term(exp, Rational(-value));
  return *this;
}

QSeriesTrunc operator*(const QSeriesTrunc& a, const QSeriesTrunc& b) {
  // With a known on [fa, Ma) and b on [fb, Mb), the product is exact only
  // below min(Ma + fb, Mb + fa).
  long order;
  if (a.is_zero() || b.is_zero()) {
    order = std::min(a.order_ + (b.is_zero() ? 0 : b.floor_exp()),
                     b.order_ + (a.is_zero() ? 0 : a.floor_exp()));
    return QSeriesTrunc(order);
  }
  order = std::min(a.order_ + b.floor_exp(), b.order_ + a.floor_exp());
  QSeriesTrunc result(order);
  for (const auto& [ea, va] : a.terms_) {
    for (const auto& [eb, vb] : b.terms_) {
      result.add_term(ea + eb, va * vb);
    }
  }
  return result;
}

QSeriesTrunc QSeriesTrunc::times_q_power(long e) const {
  QSeriesTrunc result(order_ + e);
  for (const auto& [exp, value] : terms_) result.add_term(exp + e, value);
  return result;
}

QSeriesTrunc QSeriesTrunc::truncated(long order) const {
  QSeriesTrunc result(std::min(order, order_));
  for (const auto& [exp, value] : terms_) result.add_term(exp, value);
  return result;
}

QSeriesTrunc QSeriesTrunc::reciprocal() const {
  if (terms_.empty()) throw std::invalid_argument("QSeriesTrunc::reciprocal: zero series");
  const long f = floor_exp();
  const Rational lead = terms_.begin()->second;
  // Normalize to a unit series u with u_0 = 1 on [0, order - f).
  const long ulen = order_ - f;
  std::vector<Rational> u(static_cast<std::size_t>(ulen), Rational(0));
  for (const auto& [exp, value] : terms_) u[static_cast<std::size_t>(exp - f)] = value / lead;
  std::vector<Rational> inv(static_cast<std::size_t>(ulen), Rational(0));
  inv[0] = 1;
  for (long m = 1; m < ulen; ++m) {
    Rational acc = 0;
    for (long j = 1; j <= m; ++j) acc += u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
    inv[static_cast<std::size_t>(m)] = -acc;
  }
  QSeriesTrunc result(ulen - f);
  for (long m = 0; m < ulen; ++m) {
    if (inv[static_cast<std::size_t>(m)] != 0) result.add_term(m - f, inv[static_cast<std::size_t>(m)] / lead);
  }
  return result;
}

bool QSeriesTrunc::agrees_with(const QSeriesTrunc& other) const {
  const long order = std::min(order_, other.order_);
  for (const auto& [exp, value] : terms_) {
    if (exp < order && other.at(exp) != value) return false;
  }
  for (const auto& [exp, value] : other.terms_) {
    if (exp < order && at(exp) != value) return false;
  }
  return true;
}

std::string QSeriesTrunc::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, value] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << value.get_str();
    if (exp != 0) out << "·q^" << exp;
  }
  if (first) out << "0";
  out << " + O(q^" << order_ << ")";
  return out.str();
}

QSeriesTrunc q_pochhammer(unsigned long n, long order) {
  QSeriesTrunc result = QSeriesTrunc::one(order);
  for (unsigned long i = 1; i <= n; ++i) {
    QSeriesTrunc factor = QSeriesTrunc::one(order);
    factor.add_term(static_cast<long>(i), Rational(-1));
    result = result * factor;
  }
  return result;
}

}  // namespace ncinvert
