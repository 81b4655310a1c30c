#include "whmf/level1.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace whmf {

WeightDecomposition decompose_weight(int k) {
  if (k % 2 != 0) throw UnsupportedWeight("weight must be even, got " + std::to_string(k));
  for (int kprime : {0, 4, 6, 8, 10, 14}) {
    if ((k - kprime) % 12 == 0) return WeightDecomposition{k, (k - kprime) / 12, kprime};
  }
  throw UnsupportedWeight("no 12*ell + k' decomposition for " + std::to_string(k));
}

namespace {

// gamma, rho, chi, nu, eta, omega per weight; xi and mu for the dual weight.
// eta + xi == nu holds for every row.
constexpr WeightProfile kProfiles[] = {
    // k   gamma rho chi nu  eta omega xi  mu
    {12, 3, 7, 7, 15, 12, 4, 3, 13},
    {16, 3, 8, 9, 16, 13, 6, 3, 17},
    {18, 4, 8, 9, 16, 10, 3, 6, 16},
    {20, 3, 7, 7, 16, 13, 4, 3, 21},
    {22, 5, 7, 7, 16, 12, 3, 4, 20},
    {26, 4, 9, 8, 15, 10, 3, 5, 24},
};

}  // namespace

const WeightProfile& weight_profile(int k) {
  for (const WeightProfile& p : kProfiles) {
    if (p.k == k) return p;
  }
  throw UnsupportedWeight("no divisibility profile for weight " + std::to_string(k));
}

const std::vector<int>& supported_weights() {
  static const std::vector<int> w{12, 16, 18, 20, 22, 26};
  return w;
}

Integer sigma(unsigned kpow, long n) {
  if (n < 1) throw Error("sigma(k, n) requires n >= 1");
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += ipow(Integer(d), kpow);
    const long e = n / d;
    if (e != d) s += ipow(Integer(e), kpow);
  }
  return s;
}

QSeries eisenstein(int w, long precision) {
  if (w != 4 && w != 6) throw UnsupportedWeight("Eisenstein weight must be 4 or 6");
  if (precision < 1) throw Error("eisenstein: precision must be >= 1");
  std::vector<Integer> c(static_cast<std::size_t>(precision));
  c[0] = 1;
  const long mult = (w == 4) ? 240 : -504;
  const unsigned kpow = (w == 4) ? 3 : 5;
  for (long n = 1; n < precision; ++n) c[static_cast<std::size_t>(n)] = mult * sigma(kpow, n);
  return QSeries(0, std::move(c), precision);
}

QSeries euler_phi(long precision) {
  // Pentagonal number theorem: prod(1-q^n) = sum_j (-1)^j q^{j(3j+-1)/2}.
  std::vector<Integer> c(static_cast<std::size_t>(std::max<long>(precision, 1)));
  for (long j = 0;; ++j) {
    const long g1 = j * (3 * j - 1) / 2;
    const long g2 = j * (3 * j + 1) / 2;
    if (g1 >= precision && g2 >= precision) break;
    const int s = (j % 2 == 0) ? 1 : -1;
    if (g1 < precision) c[static_cast<std::size_t>(g1)] += s;
    if (j > 0 && g2 < precision) c[static_cast<std::size_t>(g2)] += s;
  }
  return QSeries(0, std::move(c), precision);
}

QSeries delta(long precision) {
  if (precision < 2) throw Error("delta: precision must be >= 2");
  return pow(euler_phi(precision - 1), 24).shifted(1);
}

QSeries j_invariant(long precision) {
  QSeries e4 = eisenstein(4, precision + 2);
  return (pow(e4, 3) * invert(delta(precision + 2))).truncated(precision);
}

QSeries e_weight(int kprime, long precision) {
  switch (kprime) {
    case 0:
      return QSeries::one(precision);
    case 4:
      return eisenstein(4, precision);
    case 6:
      return eisenstein(6, precision);
    case 8:
      return pow(eisenstein(4, precision), 2);
    case 10:
      return eisenstein(4, precision) * eisenstein(6, precision);
    case 14:
      return pow(eisenstein(4, precision), 2) * eisenstein(6, precision);
    default:
      throw UnsupportedWeight("e_weight: k' must lie in {0,4,6,8,10,14}");
  }
}

namespace {

// Memoized canonical-basis ladders.  The ladder for weight k holds
// f_{k,-ell}, ..., f_{k,top} built greedily: each step multiplies by j and
// clears the exponents in (-m, ell] against already-built elements, which
// keeps every pivot equal to 1 and every coefficient an integer.
class BasisCache {
 public:
  static BasisCache& instance() {
    static BasisCache c;
    return c;
  }

  QSeries series(int k, long m, long min_precision) {
    std::lock_guard<std::mutex> lock(mu_);
    const Ladder& lad = ensure_locked(k, m, min_precision);
    return lad.f[index_of(k, m)];
  }

  Integer coefficient(int k, long m, long n) {
    std::lock_guard<std::mutex> lock(mu_);
    const Ladder& lad = ensure_locked(k, m, n + 1);
    return lad.f[index_of(k, m)].coeff(n);
  }

  void warm(int k, long m_max, long min_precision) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(k, m_max, min_precision);
  }

 private:
  struct Ladder {
    long top = 0;        // largest m built
    long base_prec = 0;  // precision every element is guaranteed to reach
    std::vector<QSeries> f;
  };

  static std::size_t index_of(int k, long m) {
    return static_cast<std::size_t>(m + decompose_weight(k).ell);
  }

  const Ladder& ensure_locked(int k, long m, long min_precision) {
    const WeightDecomposition d = decompose_weight(k);
    Ladder& lad = ladders_[k];
    if (!lad.f.empty() && lad.top >= m && lad.base_prec >= min_precision) return lad;
    const long top = std::max({m, lad.top, static_cast<long>(-d.ell)});
    const long prec = std::max({min_precision, lad.base_prec, static_cast<long>(d.ell) + 2});
    rebuild(k, d, top, prec, lad);
    return lad;
  }

  void rebuild(int k, const WeightDecomposition& d, long top, long prec, Ladder& lad) {
    // Work at a precision large enough that the element at index `top`
    // still reaches `prec` after losing one order per ladder step.
    const long p0 = prec + (top + d.ell) + 4;
    QSeries base = pow(delta(p0 + 4), d.ell) * e_weight(d.kprime, p0 + 4);
    const QSeries j = j_invariant(p0 + 4);
    lad.f.clear();
    lad.f.reserve(static_cast<std::size_t>(top + d.ell + 1));
    lad.f.push_back(base);
    for (long m = -d.ell + 1; m <= top; ++m) {
      QSeries g = lad.f.back() * j;
      for (long mp = m - 1; mp >= -d.ell; --mp) {
        const Integer& c = g.coeff(-mp);
        if (sgn(c) != 0) g = g - c * lad.f[static_cast<std::size_t>(mp + d.ell)];
      }
      lad.f.push_back(std::move(g));
    }
    lad.top = top;
    lad.base_prec = prec;
  }

  std::mutex mu_;
  std::map<int, Ladder> ladders_;
};

// Cusp forms Delta_k, cached with growing precision.
class DeltaKCache {
 public:
  static DeltaKCache& instance() {
    static DeltaKCache c;
    return c;
  }

  QSeries get(int k, long min_precision) {
    weight_profile(k);  // validates k
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it == cache_.end() || it->second.precision() < min_precision) {
      QSeries v = (delta(min_precision) * e_weight(k - 12, min_precision)).truncated(min_precision);
      auto [pos, ignored] = cache_.insert_or_assign(k, std::move(v));
      return pos->second;
    }
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<int, QSeries> cache_;
};

}  // namespace

QSeries canonical_basis(int k, long m, long precision) {
  const WeightDecomposition d = decompose_weight(k);
  if (m < -d.ell) {
    throw IndexBelowRange("f_{" + std::to_string(k) + "," + std::to_string(m) +
                          "}: index below -ell = " + std::to_string(-d.ell));
  }
  if (precision <= d.ell) throw Error("canonical_basis: precision must exceed ell");
  return BasisCache::instance().series(k, m, precision).truncated(precision);
}

Integer a_coefficient(int k, long m, long n) {
  const WeightDecomposition d = decompose_weight(k);
  if (m < -d.ell || n < d.ell + 1) return 0;
  // f_{k,-1} for the six theorem weights is Delta_k; serving its
  // coefficients from the cusp-form cache avoids rebuilding whole ladders
  // at the large precisions the tau rows need.
  if (m == -1 && d.ell == 1) {
    const auto& six = supported_weights();
    if (std::find(six.begin(), six.end(), k) != six.end()) return tau_k(k, n);
  }
  return BasisCache::instance().coefficient(k, m, n);
}

QSeries delta_k(int k, long precision) {
  return DeltaKCache::instance().get(k, precision).truncated(precision);
}

Integer tau_k(int k, long n) {
  weight_profile(k);
  if (n < 1) return 0;
  return DeltaKCache::instance().get(k, n + 1).coeff(n);
}

}  // namespace whmf
