#include "whmf/kolberg.hpp"

#include <algorithm>

#include "whmf/level1.hpp"

namespace whmf {

namespace {

KolbergExponents add_exponents(const KolbergExponents& a, const KolbergExponents& b) {
  return KolbergExponents{a.eq + b.eq, a.eQ + b.eQ, a.eR + b.eR, a.eS + b.eS,
                          a.eT + b.eT, a.e2 + b.e2, a.e4 + b.e4, a.e8 + b.e8,
                          a.e1 + b.e1};
}

KolbergExponents scale_exponents(const KolbergExponents& a, int n) {
  return KolbergExponents{a.eq * n, a.eQ * n, a.eR * n, a.eS * n, a.eT * n,
                          a.e2 * n, a.e4 * n, a.e8 * n, a.e1 * n};
}

KolbergExpr mono(Integer c, KolbergExponents e) { return KolbergExpr::monomial(std::move(c), e); }

// Basic Kolberg values; the imaginary unit is absorbed into the sines.
const KolbergExpr& cos_alpha() {
  static const KolbergExpr v = mono(1, {.eR = 2, .eS = 3, .eT = -2});
  return v;
}
const KolbergExpr& isin_alpha() {
  static const KolbergExpr v = mono(2, {.eq = 1, .eR = 2, .eS = 1, .eT = 2});
  return v;
}
const KolbergExpr& cos_2alpha() {
  static const KolbergExpr v = mono(1, {.eR = 8, .eS = -4});
  return v;
}
const KolbergExpr& isin_2alpha() {
  static const KolbergExpr v = mono(4, {.eq = 1, .eR = 4, .eS = 4});
  return v;
}
const KolbergExpr& isin_4alpha() {
  static const KolbergExpr v = mono(8, {.eq = 1, .eR = 12});
  return v;
}
const KolbergExpr& sin2_2alpha() {
  // sin^2(2a) = -(i sin 2a)^2
  static const KolbergExpr v = mono(-16, {.eq = 2, .eR = 8, .eS = 8});
  return v;
}
const KolbergExpr& cos_4alpha() {
  static const KolbergExpr v = KolbergExpr::constant(1) + Integer(-2) * sin2_2alpha();
  return v;
}

// Chebyshev polynomials of expressions, by the standard recurrences.
KolbergExpr cheb_t(int n, const KolbergExpr& x) {
  if (n == 0) return KolbergExpr::constant(1);
  KolbergExpr t0 = KolbergExpr::constant(1);
  KolbergExpr t1 = x;
  for (int i = 1; i < n; ++i) {
    KolbergExpr t2 = Integer(2) * (x * t1) - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

KolbergExpr cheb_u(int n, const KolbergExpr& x) {
  if (n < 0) return KolbergExpr::zero();
  KolbergExpr u0 = KolbergExpr::constant(1);
  if (n == 0) return u0;
  KolbergExpr u1 = Integer(2) * x;
  for (int i = 1; i < n; ++i) {
    KolbergExpr u2 = Integer(2) * (x * u1) - u0;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return u1;
}

}  // namespace

KolbergExpr KolbergExpr::constant(Integer c) { return monomial(std::move(c), {}); }

KolbergExpr KolbergExpr::monomial(Integer c, const KolbergExponents& e) {
  KolbergExpr r;
  if (sgn(c) != 0) r.terms_.emplace(e, std::move(c));
  return r;
}

void KolbergExpr::add_term(const KolbergExponents& e, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

KolbergExpr operator+(const KolbergExpr& a, const KolbergExpr& b) {
  KolbergExpr r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

KolbergExpr operator-(const KolbergExpr& a) {
  KolbergExpr r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

KolbergExpr operator-(const KolbergExpr& a, const KolbergExpr& b) { return a + (-b); }

KolbergExpr operator*(const KolbergExpr& a, const KolbergExpr& b) {
  KolbergExpr r;
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(add_exponents(ea, eb), prod);
    }
  }
  return r;
}

KolbergExpr operator*(const Integer& c, const KolbergExpr& a) {
  KolbergExpr r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

KolbergExpr pow(const KolbergExpr& a, int n) {
  if (n == 0) return KolbergExpr::constant(1);
  if (n < 0) {
    if (a.size() != 1) throw Error("pow: negative power of a non-monomial expression");
    const auto& [e, c] = *a.terms().begin();
    if (c != 1 && c != -1)
      throw Error("pow: negative power requires a unit coefficient");
    Integer cc = (c == -1 && (n % 2 != 0)) ? Integer(-1) : Integer(1);
    return KolbergExpr::monomial(std::move(cc), scale_exponents(e, n));
  }
  KolbergExpr result = KolbergExpr::constant(1);
  KolbergExpr base = a;
  int m = n;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

KolbergExpr normalize_phi1(const KolbergExpr& e) {
  KolbergExpr r;
  for (const auto& [x, c] : e.terms()) {
    KolbergExponents y = x;
    y.e2 += y.e1;
    y.eQ -= y.e1;
    y.e1 = 0;
    r.add_term(y, c);
  }
  return r;
}

KolbergExpr normalize_phi2(const KolbergExpr& e) {
  KolbergExpr r;
  for (const auto& [x, c] : e.terms()) {
    KolbergExponents y = x;
    y.e4 += y.e2;
    y.eR -= y.e2;
    y.e2 = 0;
    r.add_term(y, c);
  }
  return r;
}

KolbergExpr expand_cos(int k) {
  if (k < 1) throw Error("expand_cos: k must be >= 1");
  if (k % 2 == 1) return cheb_t(k, cos_alpha());
  if (k % 4 == 2) return cheb_t(k / 2, cos_2alpha());
  return cheb_t(k / 4, cos_4alpha());
}

KolbergExpr expand_isin(int k) {
  if (k < 1) throw Error("expand_isin: k must be >= 1");
  if (k % 2 == 1) return isin_alpha() * cheb_u(k - 1, cos_alpha());
  if (k % 4 == 2) return isin_2alpha() * cheb_u(k / 2 - 1, cos_2alpha());
  return isin_4alpha() * cheb_u(k / 4 - 1, cos_4alpha());
}

KolbergExpr dissect(const KolbergExpr& e, Parity parity) {
  KolbergExpr out;
  for (const auto& [x0, c] : normalize_phi1(e).terms()) {
    if (x0.eQ % 2 != 0) {
      throw OddQExponent("dissect: monomial with Q^" + std::to_string(x0.eQ));
    }
    const int half = x0.eQ / 2;
    KolbergExponents rest = x0;
    rest.eQ = 0;
    rest.eR += half;
    const bool even_q = ((x0.eq % 2) + 2) % 2 == 0;
    const bool want_cos = (parity == Parity::even) == even_q;
    KolbergExpr part;
    if (half == 0) {
      if (!want_cos) continue;  // sin(0) part is empty
      part = KolbergExpr::constant(1);
    } else if (want_cos) {
      part = expand_cos(std::abs(half));
    } else {
      part = expand_isin(std::abs(half));
      if (half < 0) part = -part;
    }
    out = out + mono(c, rest) * part;
  }
  return out;
}

KolbergExpr reduce_mod_pow2(const KolbergExpr& e, unsigned N) {
  const Integer modulus = pow2(N);
  KolbergExpr r;
  Integer res;
  for (const auto& [x, c] : e.terms()) {
    mpz_fdiv_r(res.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    r.add_term(x, res);
  }
  return r;
}

KolbergExpr halve(const KolbergExpr& e) {
  KolbergExpr r;
  for (const auto& [x, c] : e.terms()) {
    if (x.e1 != 0 || x.eQ != 0) {
      throw Error("halve: expression contains phi(q) or Q, which is not an even series");
    }
    if (((x.eq % 2) + 2) % 2 != 0) {
      throw OddExponentOfQ("halve: monomial with q^" + std::to_string(x.eq));
    }
    KolbergExponents y;
    y.eq = x.eq / 2;
    y.e2 = x.e2 + x.e4;  // phi(q^2) keeps its name, phi(q^4) halves into it
    y.eQ = x.eR - x.e2;  // phi(q^2) -> phi(q) = phi(q^2)/Q, R -> Q
    y.e4 = x.e8;
    y.eR = x.eS;
    y.eS = x.eT;
    r.add_term(y, c);
  }
  return r;
}

namespace {

struct GeneratorSeries {
  QSeries phi1, phi2, phi4, phi8, Q, R, S, T;
};

GeneratorSeries expand_generators(long P) {
  // Q = phi(q^2)/phi(q) and R, S, T substitute q -> q^2 in turn, so each is
  // the ratio of consecutive phi(q^{2^i}) expansions.
  GeneratorSeries g;
  g.phi1 = euler_phi(P);
  g.phi2 = v_op(euler_phi((P + 1) / 2 + 1), 2).truncated(P);
  g.phi4 = v_op(euler_phi((P + 3) / 4 + 1), 4).truncated(P);
  g.phi8 = v_op(euler_phi((P + 7) / 8 + 1), 8).truncated(P);
  QSeries phi16 = v_op(euler_phi((P + 15) / 16 + 1), 16).truncated(P);
  g.Q = (g.phi2 * invert(g.phi1)).truncated(P);
  g.R = (g.phi4 * invert(g.phi2)).truncated(P);
  g.S = (g.phi8 * invert(g.phi4)).truncated(P);
  g.T = (phi16 * invert(g.phi8)).truncated(P);
  return g;
}

}  // namespace

QSeries to_qseries(const KolbergExpr& e, long precision) {
  long margin = 1;
  for (const auto& [x, c] : e.terms()) margin = std::max<long>(margin, 1 - x.eq);
  const long PW = precision + margin;
  const GeneratorSeries g = expand_generators(PW);
  QSeries total = QSeries::zero(precision);
  for (const auto& [x, c] : e.terms()) {
    QSeries s = QSeries::one(PW);
    const std::pair<const QSeries*, int> factors[] = {
        {&g.phi1, x.e1}, {&g.phi2, x.e2}, {&g.phi4, x.e4}, {&g.phi8, x.e8},
        {&g.Q, x.eQ},    {&g.R, x.eR},    {&g.S, x.eS},    {&g.T, x.eT},
    };
    for (const auto& [gen, ex] : factors) {
      if (ex != 0) s = (s * pow(*gen, ex)).truncated(PW);
    }
    s = c * s.shifted(x.eq);
    total = total + s.truncated(std::min(s.precision(), precision));
  }
  return total.truncated(precision);
}

QSeries dissect_numeric(const QSeries& f, Parity parity) {
  if (f.is_zero()) return f;
  const int want = parity == Parity::even ? 0 : 1;
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(f.precision() - f.valuation()));
  for (long e = f.valuation(); e < f.precision(); ++e) {
    const bool keep = ((e % 2) + 2) % 2 == want;
    out.push_back(keep ? f.coeff(e) : Integer(0));
  }
  return QSeries(f.valuation(), std::move(out), f.precision());
}

}  // namespace whmf
