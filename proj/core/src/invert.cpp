#include "ncinvert/invert.hpp"

#include <climits>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "ncinvert/parking.hpp"

namespace ncinvert {

const NcsfElement& SolverResult::at(int deg) const {
  if (deg < 0 || deg > order) throw std::out_of_range("SolverResult::at: degree out of range");
  return components[static_cast<std::size_t>(deg)];
}

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

/* Degree-truncated product of two graded series (index = degree). */
std::vector<NcsfElement> series_mul(const std::vector<NcsfElement>& a,
                                    const std::vector<NcsfElement>& b, int top) {
  std::vector<NcsfElement> out(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    for (int j = 0; i + j <= top; ++j) {
      if (static_cast<std::size_t>(i) >= a.size() || static_cast<std::size_t>(j) >= b.size())
        continue;
      out[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

std::vector<NcsfElement> series_power(const std::vector<NcsfElement>& s, int e, int top) {
  std::vector<NcsfElement> p(static_cast<std::size_t>(top) + 1);
  p[0] = NcsfElement::unit();
  for (int i = 0; i < e; ++i) p = series_mul(p, s, top);
  return p;
}

}  // namespace

SolverResult solve_g(int order) {
  if (order < 0) throw std::invalid_argument("solve_g: negative order");
  std::vector<NcsfElement> g(static_cast<std::size_t>(order) + 1);
  g[0] = NcsfElement::unit();
  for (int m = 1; m <= order; ++m) {
    std::vector<NcsfElement> power{NcsfElement::unit()};
    power.resize(static_cast<std::size_t>(m) + 1);
    NcsfElement total;
    for (int n = 1; n <= m; ++n) {
      power = series_mul(power, g, m);  // g^n
      total += NcsfElement::s_generator(n) * power[static_cast<std::size_t>(m - n)];
    }
    g[static_cast<std::size_t>(m)] = std::move(total);
  }
  return SolverResult{"g", order, std::move(g)};
}

SolverResult solve_h(int order) {
  if (order < 0) throw std::invalid_argument("solve_h: negative order");
  std::vector<NcsfElement> h(static_cast<std::size_t>(order) + 1);
  h[0] = NcsfElement::unit();
  for (int m = 1; m <= order; ++m) {
    std::vector<NcsfElement> power = series_mul(h, h, m);  // h^2
    NcsfElement total;
    for (int n = 1; n <= m; ++n) {
      total += NcsfElement::s_generator(n) * power[static_cast<std::size_t>(m - n)];
      if (n < m) power = series_mul(power, h, m);  // h^{n+2}
    }
    h[static_cast<std::size_t>(m)] = -total;
  }
  return SolverResult{"h", order, std::move(h)};
}

SolverResult solve_f0(int order) {
  if (order < 0) throw std::invalid_argument("solve_f0: negative order");
  const auto letter = [](int n) {
    return NcsfElement::from_key(Basis::S, GenComposition{n});
  };
  std::vector<NcsfElement> f(static_cast<std::size_t>(order) + 1);
  f[0] = letter(0);
  for (int m = 1; m <= order; ++m) {
    std::vector<NcsfElement> power = f;  // f^1
    power.resize(static_cast<std::size_t>(m) + 1);
    NcsfElement total;
    for (int n = 1; n <= m; ++n) {
      total += letter(n) * power[static_cast<std::size_t>(m - n)];
      if (n < m) power = series_mul(power, f, m);  // f^{n+1}
    }
    f[static_cast<std::size_t>(m)] = std::move(total);
  }
  return SolverResult{"f0", order, std::move(f)};
}

SolverResult solve_b_family(int b, int order) {
  if (order < 0) throw std::invalid_argument("solve_b_family: negative order");
  if (b < -1) throw std::invalid_argument("solve_b_family: requires b >= -1");
  std::vector<NcsfElement> g(static_cast<std::size_t>(order) + 1);
  g[0] = NcsfElement::unit();
  for (int m = 1; m <= order; ++m) {
    std::vector<NcsfElement> power = series_power(g, b + 1, m);  // g^{b+1}
    NcsfElement total;
    for (int n = 1; n <= m; ++n) {
      total += NcsfElement::s_generator(n) * power[static_cast<std::size_t>(m - n)];
      if (n < m) power = series_mul(power, g, m);  // g^{b+n+1}
    }
    g[static_cast<std::size_t>(m)] = std::move(total);
  }
  return SolverResult{"b=" + std::to_string(b), order, std::move(g)};
}

XSeries solve_k(int order) {
  if (order < 0) throw std::invalid_argument("solve_k: negative order");
  XSeries k(order);
  for (int deg = 1; deg <= order; ++deg) {
    /* prod_n = K(q^{n-1} x) ... K(x); only the first deg - 1 factors can
     * reach degree deg - 1, and they involve components below deg only. */
    NcsfElement total = (deg == 1) ? NcsfElement::unit() : NcsfElement();
    XSeries prod(order);
    prod.at(0) = NcsfElement::unit();
    for (int n = 1; n < deg; ++n) {
      prod = k.subst_x_q_scale(n - 1) * prod;
      total += NcsfElement::s_generator(n) * prod.at(deg - 1);
    }
    k.at(deg) = total.scaled(Coefficient::q_power(1));
  }
  return k;
}

SolverResult quotient_g(int r, int order) {
  if (order < 0) throw std::invalid_argument("quotient_g: negative order");
  if (r < 1) throw std::invalid_argument("quotient_g: requires r >= 1");
  XSeries upper(order);
  XSeries lower(order);
  for (int n = 0; n <= order; ++n) {
    const Coefficient pre = Coefficient::q_power(-binom2(n));
    upper.at(n) = NcsfElement::s_generator(n).alphabet_q_interval(n + r).scaled(pre);
    lower.at(n) = NcsfElement::s_generator(n).alphabet_q_interval(n + r - 1).scaled(pre);
  }
  const XSeries ratio = upper.subst_x_q_scale(-1) * lower.inverse();
  std::vector<NcsfElement> components;
  components.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    components.push_back(ratio.at(n).scaled(Coefficient::q_power(binom2(n + 1))));
  }
  return SolverResult{"quotient r=" + std::to_string(r), order, std::move(components)};
}

namespace {

/* Smallest q-exponent over every monomial of every term; LONG_MAX if zero. */
long element_min_q_exp(const NcsfElement& elem) {
  long best = LONG_MAX;
  for (const auto& [key, coeff] : elem.terms()) {
    (void)key;
    const long m = coeff.min_q_exp();
    if (m < best) best = m;
  }
  return best;
}

}  // namespace

KlQuotient quotient_kl(int k, int l, int order, bool q_mode, int r) {
  if (order < 0) throw std::invalid_argument("quotient_kl: negative order");
  if (k < 1 || l < 1) throw std::invalid_argument("quotient_kl: requires k, l >= 1");
  if (r == 0) r = l + 1;
  if (r <= l) throw std::invalid_argument("quotient_kl: requires r > l");

  KlQuotient out;
  out.k = k;
  out.l = l;
  out.r = r;
  out.q_mode = q_mode;

  XSeries upper(order);
  XSeries lower(order);
  for (int n = 0; n <= order; ++n) {
    if (q_mode) {
      const Coefficient pre = Coefficient::q_power(-static_cast<long>(k) * binom2(n + 1));
      upper.at(n) = NcsfElement::s_generator(n).alphabet_q_interval(n * k + r).scaled(pre);
      lower.at(n) = NcsfElement::s_generator(n).alphabet_q_interval(n * k + r - l).scaled(pre);
    } else {
      upper.at(n) = NcsfElement::s_generator(n).alphabet_multiple(n * k + r);
      lower.at(n) = NcsfElement::s_generator(n).alphabet_multiple(n * k + r - l);
    }
  }
  const XSeries ratio =
      q_mode ? upper * lower.subst_x_q_scale(l).inverse() : upper * lower.inverse();

  const std::string tag = "quotient k=" + std::to_string(k) + " l=" + std::to_string(l) +
                          " r=" + std::to_string(r) + (q_mode ? " q" : " q=1");
  out.raw.equation = tag;
  out.raw.order = order;
  out.normalized.equation = tag + " normalized";
  out.normalized.order = order;

  const ParkingFamily family = ParkingFamily::arithmetic(k, l);
  for (int n = 0; n <= order; ++n) {
    const NcsfElement raw = ratio.at(n);
    out.raw.components.push_back(raw);
    if (!q_mode) {
      out.normalized.components.push_back(raw);
      continue;
    }
    const NcsfElement reference = char_q(family, n);
    long inferred = 0;
    bool matched = false;
    const long raw_min = element_min_q_exp(raw);
    const long ref_min = element_min_q_exp(reference);
    if (raw_min == LONG_MAX && ref_min == LONG_MAX) {
      matched = true;
    } else if (raw_min != LONG_MAX && ref_min != LONG_MAX) {
      inferred = raw_min - ref_min;
      matched = (raw.scaled(Coefficient::q_power(-inferred)) == reference);
    }
    out.normalization.inferred.push_back(inferred);
    out.normalization.matched.push_back(matched);
    out.normalization.triangular.push_back(-static_cast<long>(k) * binom2(n + 1));
    out.normalization.triangular_shifted.push_back(
        -static_cast<long>(k) * binom2(n + 1) -
        static_cast<long>(n) * (static_cast<long>(n) * k + l));
    out.normalized.components.push_back(
        matched ? raw.scaled(Coefficient::q_power(-inferred)) : raw);
  }
  return out;
}

NcsfElement abel_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("abel_polynomial: negative size");
  const SolverResult g = solve_g(n);
  std::vector<NcsfElement> u(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) u[static_cast<std::size_t>(d)] = g.at(d).eval_q_one();
  NcsfElement total;
  std::vector<NcsfElement> power{NcsfElement::unit()};
  power.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    total += power[static_cast<std::size_t>(n)].scaled(binomial_poly(static_cast<unsigned long>(m)));
    if (m < n) power = series_mul(power, u, n);
  }
  return total;
}

NcsfElement abel_via_ndpf(int n) {
  if (n < 0) throw std::invalid_argument("abel_via_ndpf: negative size");
  NcsfElement total;
  for (const Word& word : enumerate_nondecreasing(ParkingFamily::classic(), n)) {
    const int factors = connected_factor_count(word);
    const Coefficient weight =
        (factors == 0) ? Coefficient::one()
                       : shifted_binomial_poly(factors - 1, static_cast<unsigned long>(factors));
    total += NcsfElement::from_key(Basis::S, packed_evaluation(word), weight);
  }
  return total;
}

Coefficient abel_one_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("abel_one_closed_form: negative size");
  if (n == 0) return Coefficient::one();
  Coefficient out = Coefficient::x_power(1);
  for (int i = n + 1; i <= 2 * n - 1; ++i) {
    out *= Coefficient::x_power(1) + Coefficient(static_cast<long>(i));
  }
  return out.scaled(Rational(1) / Rational(factorial(static_cast<unsigned long>(n))));
}

Integer catalan_triangle_c(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("catalan_triangle_c: negative argument");
  if (n == 0) return (k == 0) ? Integer(1) : Integer(0);
  if (k < 1 || k > n) return Integer(0);
  Rational value =
      Rational(k) / Rational(2 * n - k) *
      Rational(integer_binomial(Integer(2 * n - k), static_cast<unsigned long>(n - k)));
  value.canonicalize();
  if (value.get_den() != 1)
    throw std::logic_error("catalan_triangle_c: expected an integer value");
  return value.get_num();
}

}  // namespace ncinvert
