#pragma once

#include <string>
#include <vector>

#include "whmf/errors.hpp"
#include "whmf/integer.hpp"

namespace whmf {

/// Truncated Laurent series in q with Integer coefficients, known modulo
/// O(q^precision).  Immutable after construction; every operation returns a
/// fresh value carrying the largest provably correct precision.
///
/// Invariants:
///  - valuation < precision, or the series is zero (empty storage); the zero
///    series reports valuation == precision.
///  - the leading stored coefficient is nonzero,
///  - storage covers exactly the exponent range [valuation, precision).
class QSeries {
 public:
  /// The zero series known modulo O(q^precision).
  static QSeries zero(long precision) { return QSeries(precision, {}, precision); }

  /// 1 + O(q^precision).
  static QSeries one(long precision) { return monomial(1, 0, precision); }

  /// c*q^e + O(q^precision); requires e < precision.
  static QSeries monomial(Integer c, long e, long precision);

  /// coeffs[i] is the coefficient of q^(valuation+i); normalizes leading
  /// zeros into the valuation and materializes the range [valuation, precision).
  QSeries(long valuation, std::vector<Integer> coeffs, long precision);

  QSeries() : val_(0), prec_(0) {}

  long valuation() const { return val_; }
  long precision() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^e: the stored value, or 0 below the valuation.
  /// Throws PrecisionExceeded for e >= precision().
  const Integer& coeff(long e) const;

  /// Same series forgetting everything at or past the given precision.
  QSeries truncated(long precision) const;

  /// Exact multiplication by q^e (shifts both valuation and precision).
  QSeries shifted(long e) const;

  /// Renders as `q^v*(c0 + c1*q + ...) + O(q^P)`.
  std::string str() const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Integer& c, const QSeries& a);

 private:
  long val_;
  long prec_;
  std::vector<Integer> coeffs_;
};

/// Multiplicative inverse; requires leading coefficient +1 or -1, else
/// throws NonUnitLeadingCoefficient.  mul(a, invert(a)) == 1 at the
/// propagated precision.
QSeries invert(const QSeries& a);

/// a^n for any integer n; pow(a, 0) == 1, negative n inverts first.
QSeries pow(const QSeries& a, long n);

/// (f|U_p): keeps exponents divisible by p and divides them by p.
/// Result precision is ceil(precision/p).
QSeries u_op(const QSeries& a, int p);

/// (f|V_p): substitutes q -> q^p.  Result precision is p*precision.
QSeries v_op(const QSeries& a, int p);

/// Divides every coefficient by d, throwing ExactDivisionFailure if any
/// coefficient is not an exact multiple.
QSeries exact_divide(const QSeries& a, const Integer& d);

/// True when a and b agree coefficient-wise on the whole range both know,
/// i.e. below min(a.precision, b.precision).
bool equal_to_precision(const QSeries& a, const QSeries& b);

}  // namespace whmf
