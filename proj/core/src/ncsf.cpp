#include "ncinvert/ncsf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace ncinvert {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::S: return 'S';
    case Basis::R: return 'R';
    case Basis::L: return 'L';
  }
  throw std::logic_error("basis_letter: bad basis");
}

NcsfElement NcsfElement::unit(Basis basis) {
  NcsfElement e(basis);
  e.add_term({}, Coefficient::one());
  return e;
}

NcsfElement NcsfElement::s_generator(int n) {
  if (n < 0) throw std::invalid_argument("s_generator: negative degree");
  if (n == 0) return unit(Basis::S);
  return from_key(Basis::S, GenComposition{n});
}

NcsfElement NcsfElement::from_key(Basis basis, GenComposition key, Coefficient coeff) {
  NcsfElement e(basis);
  e.add_term(key, coeff);
  return e;
}

Coefficient NcsfElement::coefficient(const GenComposition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Coefficient::zero() : it->second;
}

bool NcsfElement::has_zero_part_key() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::any_of(t.first.begin(), t.first.end(), [](int p) { return p == 0; });
  });
}

long NcsfElement::degree() const {
  long deg = 0;
  for (const auto& [key, coeff] : terms_) deg = std::max(deg, weight(key));
  return deg;
}

void NcsfElement::add_term(const GenComposition& key, const Coefficient& coeff) {
  if (!is_gen_composition(key)) throw std::invalid_argument("NcsfElement: negative key part");
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcsfElement& NcsfElement::operator+=(const NcsfElement& rhs) {
  if (basis_ != rhs.basis_ && !rhs.is_zero() && !is_zero())
    throw std::invalid_argument("NcsfElement: basis mismatch in addition");
  if (is_zero()) basis_ = rhs.basis_;
  for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
  return *this;
}

NcsfElement& NcsfElement::operator-=(const NcsfElement& rhs) {
  if (basis_ != rhs.basis_ && !rhs.is_zero() && !is_zero())
    throw std::invalid_argument("NcsfElement: basis mismatch in subtraction");
  if (is_zero()) basis_ = rhs.basis_;
  for (const auto& [key, coeff] : rhs.terms_) add_term(key, -coeff);
  return *this;
}

NcsfElement NcsfElement::operator-() const {
  NcsfElement result(basis_);
  for (const auto& [key, coeff] : terms_) result.terms_.emplace(key, -coeff);
  return result;
}

NcsfElement operator*(const NcsfElement& a, const NcsfElement& b) {
  if (a.basis_ != Basis::S || b.basis_ != Basis::S)
    throw std::invalid_argument("NcsfElement: products require the S basis");
  NcsfElement result(Basis::S);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      GenComposition key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      result.add_term(key, ca * cb);
    }
  }
  return result;
}

NcsfElement NcsfElement::scaled(const Coefficient& factor) const {
  NcsfElement result(basis_);
  for (const auto& [key, coeff] : terms_) result.add_term(key, coeff * factor);
  return result;
}

namespace {

void require_zero_free(const NcsfElement& e, const char* what) {
  if (e.has_zero_part_key())
    throw std::invalid_argument(std::string(what) + ": keys with zero parts are not supported");
}

/* Substitute an image for every generator of every key and multiply the
 * images out by key concatenation.  Valid for the multiplicative bases
 * (S and L). */
NcsfElement substitute_generators(const NcsfElement& elem, Basis out,
                                  const std::function<NcsfElement(int)>& image) {
  NcsfElement result(out);
  for (const auto& [key, coeff] : elem.terms()) {
    NcsfElement acc = NcsfElement::unit(out);
    for (int part : key) {
      const NcsfElement img = image(part);
      NcsfElement next(out);
      for (const auto& [ka, ca] : acc.terms()) {
        for (const auto& [kb, cb] : img.terms()) {
          GenComposition k = ka;
          k.insert(k.end(), kb.begin(), kb.end());
          next.add_term(k, ca * cb);
        }
      }
      acc = std::move(next);
    }
    result += acc.scaled(coeff);
  }
  return result;
}

/* Sum over compositions J of n of sign(J) * key(J), in the given basis. */
NcsfElement alternating_generator_image(int n, Basis out, bool sign_by_length) {
  NcsfElement img(out);
  for (const Composition& j : compositions_of(n)) {
    const long len = static_cast<long>(j.size());
    const long sign_exp = sign_by_length ? len : n - len;
    img.add_term(j, Coefficient(Rational((sign_exp % 2 == 0) ? 1 : -1)));
  }
  return img;
}

NcsfElement s_to_r(const NcsfElement& e) {
  require_zero_free(e, "to_basis(R)");
  NcsfElement result(Basis::R);
  for (const auto& [key, coeff] : e.terms()) {
    for (const Composition& j : coarsenings(key)) result.add_term(j, coeff);
  }
  return result;
}

NcsfElement r_to_s(const NcsfElement& e) {
  require_zero_free(e, "to_basis from R");
  NcsfElement result(Basis::S);
  for (const auto& [key, coeff] : e.terms()) {
    const long len = static_cast<long>(key.size());
    for (const Composition& j : coarsenings(key)) {
      const long drop = len - static_cast<long>(j.size());
      result.add_term(j, coeff.scaled(Rational((drop % 2 == 0) ? 1 : -1)));
    }
  }
  return result;
}

NcsfElement s_to_l(const NcsfElement& e) {
  require_zero_free(e, "to_basis(L)");
  return substitute_generators(e, Basis::L,
                               [](int n) { return alternating_generator_image(n, Basis::L, false); });
}

NcsfElement l_to_s(const NcsfElement& e) {
  require_zero_free(e, "to_basis from L");
  return substitute_generators(e, Basis::S,
                               [](int n) { return alternating_generator_image(n, Basis::S, false); });
}

}  // namespace

NcsfElement NcsfElement::to_basis(Basis target) const {
  if (target == basis_) return *this;
  NcsfElement in_s(Basis::S);
  switch (basis_) {
    case Basis::S: in_s = *this; break;
    case Basis::R: in_s = r_to_s(*this); break;
    case Basis::L: in_s = l_to_s(*this); break;
  }
  switch (target) {
    case Basis::S: return in_s;
    case Basis::R: return s_to_r(in_s);
    case Basis::L: return s_to_l(in_s);
  }
  throw std::logic_error("to_basis: bad target");
}

NcsfElement NcsfElement::nu() const {
  if (basis_ != Basis::S) throw std::invalid_argument("nu: S basis required");
  require_zero_free(*this, "nu");
  NcsfElement result(Basis::S);
  for (const auto& [key, coeff] : terms_) result.add_term(conjugate(key), coeff);
  return result;
}

NcsfElement NcsfElement::alphabet_negate() const {
  if (basis_ != Basis::S) throw std::invalid_argument("alphabet_negate: S basis required");
  require_zero_free(*this, "alphabet_negate");
  return substitute_generators(*this, Basis::S,
                               [](int n) { return alternating_generator_image(n, Basis::S, true); });
}

NcsfElement NcsfElement::alphabet_multiple(long copies) const {
  if (basis_ != Basis::S) throw std::invalid_argument("alphabet_multiple: S basis required");
  require_zero_free(*this, "alphabet_multiple");
  return substitute_generators(*this, Basis::S, [copies](int n) {
    NcsfElement img(Basis::S);
    for (const Composition& j : compositions_of(n)) {
      img.add_term(j, Coefficient(Rational(integer_binomial(Integer(copies), j.size()))));
    }
    return img;
  });
}

NcsfElement NcsfElement::alphabet_q_interval(long n) const {
  if (basis_ != Basis::S) throw std::invalid_argument("alphabet_q_interval: S basis required");
  require_zero_free(*this, "alphabet_q_interval");
  if (n < 0) throw std::invalid_argument("alphabet_q_interval: negative interval");
  return substitute_generators(*this, Basis::S, [n](int m) {
    NcsfElement img(Basis::S);
    for (const Composition& j : compositions_of(m)) img.add_term(j, monomial_q_eval(j, n));
    return img;
  });
}

Coefficient NcsfElement::specialize_one() const {
  if (basis_ != Basis::S) throw std::invalid_argument("specialize_one: S basis required");
  Coefficient result;
  for (const auto& [key, coeff] : terms_) result += coeff;
  return result;
}

Coefficient NcsfElement::specialize_exp() const {
  if (basis_ != Basis::S) throw std::invalid_argument("specialize_exp: S basis required");
  Coefficient result;
  for (const auto& [key, coeff] : terms_) {
    Rational factor = 1;
    for (int part : key) factor /= Rational(factorial(static_cast<unsigned long>(part)));
    result += coeff.scaled(factor).times_x_power(weight(key));
  }
  return result;
}

Coefficient NcsfElement::specialize_binomial(long alpha) const {
  if (basis_ != Basis::S) throw std::invalid_argument("specialize_binomial: S basis required");
  Coefficient result;
  for (const auto& [key, coeff] : terms_) {
    Rational factor = 1;
    for (int part : key) {
      factor *= Rational(integer_binomial(Integer(alpha + part - 1), static_cast<unsigned long>(part)));
    }
    result += coeff.scaled(factor).times_x_power(weight(key));
  }
  return result;
}

std::map<std::vector<int>, Coefficient> NcsfElement::commutative_image() const {
  if (basis_ != Basis::S) throw std::invalid_argument("commutative_image: S basis required");
  std::map<std::vector<int>, Coefficient> result;
  for (const auto& [key, coeff] : terms_) {
    std::vector<int> partition = corresponding_composition(key);
    std::sort(partition.begin(), partition.end(), std::greater<int>());
    auto [it, inserted] = result.try_emplace(partition, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) result.erase(it);
    }
  }
  return result;
}

NcsfElement NcsfElement::eval_q_one() const {
  NcsfElement result(basis_);
  for (const auto& [key, coeff] : terms_) result.add_term(key, coeff.eval_q_one());
  return result;
}

NcsfElement NcsfElement::subst_q_inverse() const {
  NcsfElement result(basis_);
  for (const auto& [key, coeff] : terms_) result.add_term(key, coeff.subst_q_inverse());
  return result;
}

std::string NcsfElement::to_text() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> entries;
  entries.reserve(terms_.size());
  for (const auto& entry : terms_) entries.push_back(&entry);
  std::stable_sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first > b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* entry : entries) {
    if (!first) out << " + ";
    first = false;
    const auto& [key, coeff] = *entry;
    if (key.empty()) {
      out << coeff.to_text();
      continue;
    }
    if (!coeff.is_one()) {
      const bool atom = coeff.terms().size() == 1;
      if (atom) {
        out << coeff.to_text() << "·";
      } else {
        out << "(" << coeff.to_text() << ")·";
      }
    }
    out << basis_letter(basis_) << "[";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out << ",";
      out << key[i];
    }
    out << "]";
  }
  return out.str();
}

Coefficient monomial_q_eval(const Composition& comp, long n) {
  if (!is_composition(comp)) throw std::invalid_argument("monomial_q_eval: composition required");
  const std::size_t len = comp.size();
  Coefficient total;
  // Depth-first over the strictly increasing tuples 0 <= j_1 < ... < j_len <= n-1.
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t idx, long next_min, long exponent) {
    if (idx == len) {
      total += Coefficient::q_power(exponent);
      return;
    }
    for (long j = next_min; j <= n - static_cast<long>(len - idx); ++j) {
      rec(idx + 1, j + 1, exponent + comp[idx] * j);
    }
  };
  rec(0, 0, 0);
  return total;
}

XSeries::XSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("XSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, NcsfElement(Basis::S));
}

NcsfElement& XSeries::at(int deg) { return coeffs_.at(static_cast<std::size_t>(deg)); }

const NcsfElement& XSeries::at(int deg) const { return coeffs_.at(static_cast<std::size_t>(deg)); }

XSeries operator*(const XSeries& a, const XSeries& b) {
  XSeries result(std::min(a.order_, b.order_));
  for (int n = 0; n <= result.order_; ++n) {
    NcsfElement acc(Basis::S);
    for (int k = 0; k <= n; ++k) acc += a.at(k) * b.at(n - k);
    result.at(n) = std::move(acc);
  }
  return result;
}

XSeries XSeries::inverse() const {
  if (!(at(0) == NcsfElement::unit()))
    throw std::invalid_argument("XSeries::inverse: constant term must be the unit");
  XSeries result(order_);
  result.at(0) = NcsfElement::unit();
  for (int n = 1; n <= order_; ++n) {
    NcsfElement acc(Basis::S);
    for (int k = 1; k <= n; ++k) acc += at(k) * result.at(n - k);
    result.at(n) = -acc;
  }
  return result;
}

XSeries XSeries::subst_x_q_scale(long e) const {
  XSeries result(order_);
  for (int n = 0; n <= order_; ++n) {
    result.at(n) = at(n).scaled(Coefficient::q_power(e * n));
  }
  return result;
}

}  // namespace ncinvert
