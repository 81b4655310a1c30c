#include "whmf/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace whmf {

namespace {
const Integer kZero = 0;

long ceil_div(long a, long p) { return -((-a) / p); }
}  // namespace

QSeries QSeries::monomial(Integer c, long e, long precision) {
  if (sgn(c) == 0) return zero(precision);
  std::vector<Integer> v;
  v.push_back(std::move(c));
  return QSeries(e, std::move(v), precision);
}

QSeries::QSeries(long valuation, std::vector<Integer> coeffs, long precision)
    : val_(valuation), prec_(precision), coeffs_(std::move(coeffs)) {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }
  if (val_ >= prec_) {  // every stored term lies beyond the precision horizon
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  // materialize [val_, prec_)
  const std::size_t want = static_cast<std::size_t>(prec_ - val_);
  if (coeffs_.size() > want) {
    coeffs_.resize(want);
    // trailing truncation can expose an all-zero tail; renormalize
    std::size_t lead2 = 0;
    while (lead2 < coeffs_.size() && sgn(coeffs_[lead2]) == 0) ++lead2;
    if (lead2 == coeffs_.size()) {
      coeffs_.clear();
      val_ = prec_;
    }
  } else if (coeffs_.size() < want) {
    coeffs_.resize(want);
  }
}

const Integer& QSeries::coeff(long e) const {
  if (e >= prec_) {
    throw PrecisionExceeded("coefficient of q^" + std::to_string(e) +
                            " requested from a series known modulo O(q^" +
                            std::to_string(prec_) + ")");
  }
  if (e < val_) return kZero;
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

QSeries QSeries::truncated(long precision) const {
  if (precision >= prec_) return *this;
  if (is_zero() || precision <= val_) return zero(precision);
  std::vector<Integer> v(coeffs_.begin(), coeffs_.begin() + (precision - val_));
  return QSeries(val_, std::move(v), precision);
}

QSeries QSeries::shifted(long e) const {
  QSeries r = *this;
  r.val_ += e;
  r.prec_ += e;
  return r;
}

std::string QSeries::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "0 + O(q^" << prec_ << ")";
    return os.str();
  }
  os << "q^" << val_ << "*(";
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (i != 1) os << "^" << i;
    }
  }
  os << ") + O(q^" << prec_ << ")";
  return os.str();
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const long prec = std::min(a.prec_, b.prec_);
  if (a.is_zero()) return b.truncated(prec);
  if (b.is_zero()) return a.truncated(prec);
  const long val = std::min(a.val_, b.val_);
  if (val >= prec) return QSeries::zero(prec);
  std::vector<Integer> out(static_cast<std::size_t>(prec - val));
  for (long e = a.val_; e < std::min(a.prec_, prec); ++e)
    out[static_cast<std::size_t>(e - val)] = a.coeffs_[static_cast<std::size_t>(e - a.val_)];
  for (long e = b.val_; e < std::min(b.prec_, prec); ++e)
    out[static_cast<std::size_t>(e - val)] += b.coeffs_[static_cast<std::size_t>(e - b.val_)];
  return QSeries(val, std::move(out), prec);
}

QSeries operator-(const QSeries& a) {
  QSeries r = a;
  for (Integer& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const long prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  if (a.is_zero() || b.is_zero()) return QSeries::zero(prec);
  const long val = a.val_ + b.val_;
  if (val >= prec) return QSeries::zero(prec);
  const std::size_t n = static_cast<std::size_t>(prec - val);
  std::vector<Integer> out(n);
  const std::size_t na = a.coeffs_.size(), nb = b.coeffs_.size();
  for (std::size_t i = 0; i < na && i < n; ++i) {
    const Integer& x = a.coeffs_[i];
    if (sgn(x) == 0) continue;
    const std::size_t jmax = std::min(nb, n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      const Integer& y = b.coeffs_[j];
      if (sgn(y) != 0) mpz_addmul(out[i + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  }
  return QSeries(val, std::move(out), prec);
}

QSeries operator*(const Integer& c, const QSeries& a) {
  if (sgn(c) == 0) return QSeries::zero(a.prec_);
  QSeries r = a;
  for (Integer& x : r.coeffs_) x *= c;
  return r;
}

QSeries invert(const QSeries& a) {
  if (a.is_zero()) throw NonUnitLeadingCoefficient("cannot invert the zero series");
  const Integer& c0 = a.coeff(a.valuation());
  if (c0 != 1 && c0 != -1) {
    throw NonUnitLeadingCoefficient("leading coefficient must be +1 or -1");
  }
  // Solve c0*d_n = -(c_1 d_{n-1} + ... + c_n d_0) on the unit part.
  const long n = a.precision() - a.valuation();
  std::vector<Integer> d(static_cast<std::size_t>(n));
  d[0] = c0;
  Integer s;
  for (long t = 1; t < n; ++t) {
    s = 0;
    for (long i = 1; i <= t; ++i) {
      const Integer& ci = a.coeff(a.valuation() + i);
      if (sgn(ci) != 0)
        mpz_addmul(s.get_mpz_t(), ci.get_mpz_t(), d[static_cast<std::size_t>(t - i)].get_mpz_t());
    }
    d[static_cast<std::size_t>(t)] = (c0 == 1) ? Integer(-s) : s;
  }
  return QSeries(-a.valuation(), std::move(d), a.precision() - 2 * a.valuation());
}

QSeries pow(const QSeries& a, long n) {
  if (n == 0) return QSeries::one(a.precision() - a.valuation());
  if (n < 0) return pow(invert(a), -n);
  QSeries base = a;
  QSeries result;
  bool have = false;
  while (n > 0) {
    if (n & 1) {
      result = have ? result * base : base;
      have = true;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QSeries u_op(const QSeries& a, int p) {
  const long prec = ceil_div(a.precision(), p);
  if (a.is_zero()) return QSeries::zero(prec);
  const long val0 = ceil_div(a.valuation(), p);
  if (val0 >= prec) return QSeries::zero(prec);
  std::vector<Integer> out(static_cast<std::size_t>(prec - val0));
  for (long e = a.valuation(); e < a.precision(); ++e) {
    if (e % p == 0 && e / p < prec) {
      const Integer& c = a.coeff(e);
      if (sgn(c) != 0) out[static_cast<std::size_t>(e / p - val0)] = c;
    }
  }
  return QSeries(val0, std::move(out), prec);
}

QSeries v_op(const QSeries& a, int p) {
  const long prec = a.precision() * p;
  if (a.is_zero()) return QSeries::zero(prec);
  const long val = a.valuation() * p;
  std::vector<Integer> out(static_cast<std::size_t>(prec - val));
  for (long e = a.valuation(); e < a.precision(); ++e) {
    const Integer& c = a.coeff(e);
    if (sgn(c) != 0) out[static_cast<std::size_t>((e - a.valuation()) * p)] = c;
  }
  return QSeries(val, std::move(out), prec);
}

QSeries exact_divide(const QSeries& a, const Integer& d) {
  if (sgn(d) == 0) throw ExactDivisionFailure("division by zero");
  if (a.is_zero()) return a;
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(a.precision() - a.valuation()));
  for (long e = a.valuation(); e < a.precision(); ++e) {
    const Integer& c = a.coeff(e);
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      std::ostringstream os;
      os << "coefficient of q^" << e << " is not divisible by " << d;
      throw ExactDivisionFailure(os.str());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.push_back(std::move(q));
  }
  return QSeries(a.valuation(), std::move(out), a.precision());
}

bool equal_to_precision(const QSeries& a, const QSeries& b) {
  const long prec = std::min(a.precision(), b.precision());
  const long lo = std::min(a.valuation(), b.valuation());
  for (long e = lo; e < prec; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

}  // namespace whmf
