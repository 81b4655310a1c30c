#include "whmf/operators.hpp"

#include <algorithm>

#include "whmf/level1.hpp"

namespace whmf {

namespace {

Integer ppow(int p, long e) {
  if (e < 0) throw Error("ppow: negative exponent");
  return ipow(Integer(p), static_cast<unsigned long>(e));
}

// p^s * (f|T_p) with s chosen by the caller so that s + k - 1 >= 0.
QSeries scaled_hecke(const QSeries& f, int p, int k, long s) {
  return ppow(p, s) * u_op(f, p) + ppow(p, s + k - 1) * v_op(f, p);
}

}  // namespace

DivIndicator::DivIndicator(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {
  if (sgn(y) == 0) throw Error("DivIndicator: zero modulus");
  value = mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()) ? 1 : 0;
}

QSeries hecke_t(const QSeries& f, int p, int k) {
  if (k < 1) throw UnsupportedWeight("hecke_t needs k >= 1; use the identity checks for k < 1");
  return u_op(f, p) + ppow(p, k - 1) * v_op(f, p);
}

bool check_hecke_relation(int k, long m, long n, int p) {
  const Integer pk1 = ppow(p, k - 1);
  Integer lhs = a_coefficient(k, m, p) * tau_k(k, n) + pk1 * a_coefficient(k, m * p, n);
  if (m % p == 0) lhs += a_coefficient(k, m / p, n);
  Integer rhs = a_coefficient(k, m, n * p);
  if (n % p == 0) rhs += pk1 * a_coefficient(k, m, n / p);
  return lhs == rhs;
}

bool check_hecke_squared_relation(int k, long m, long n, int p) {
  const Integer pk1 = ppow(p, k - 1);
  const Integer p2k2 = ppow(p, 2 * k - 2);
  const int dm = DivIndicator(m, p).value;
  const int dn = DivIndicator(n, p).value;
  Integer lhs = p2k2 * a_coefficient(k, m * p * p, n) +
                Integer(1 + dm) * pk1 * a_coefficient(k, m, n) +
                a_coefficient(k, m, static_cast<long>(p) * p) * tau_k(k, n);
  if (m % (static_cast<long>(p) * p) == 0) lhs += a_coefficient(k, m / (p * p), n);
  Integer rhs = Integer(1 + dn) * pk1 * a_coefficient(k, m, n) +
                a_coefficient(k, m, n * p * p);
  if (n % (static_cast<long>(p) * p) == 0) rhs += p2k2 * a_coefficient(k, m, n / (p * p));
  return lhs == rhs;
}

bool check_thm41_identity(const QSeries& f, int p, int k) {
  const long s = std::max<long>(0, 1 - k);
  QSeries lhs = ppow(p, s) * (-f) + ppow(p, s + 1) * v_op(u_op(f, p), p) +
                ppow(p, s + k) * v_op(v_op(f, p), p);
  QSeries h1 = scaled_hecke(f, p, k, s);
  QSeries rhs = Integer(p) * v_op(h1, p) - ppow(p, s) * f;
  return equal_to_precision(lhs, rhs);
}

bool check_thm42_identity(const QSeries& f, int p, int k) {
  const long s = std::max<long>(0, 1 - k);
  const long s2 = 2 * s;
  QSeries fp = u_op(f, p);
  QSeries fp2 = u_op(fp, p);
  QSeries lhs = ppow(p, s2) * (-fp) + ppow(p, s2 + 1) * v_op(fp2, p) -
                ppow(p, s2 + k - 1) * v_op(f, p) +
                ppow(p, s2 + k) * v_op(v_op(fp, p), p) +
                ppow(p, s2 + 2 * k - 1) * v_op(v_op(v_op(f, p), p), p);
  QSeries h1 = scaled_hecke(f, p, k, s);
  QSeries h2 = scaled_hecke(h1, p, k, s);  // p^{2s} (f|T_p|T_p)
  QSeries rhs = Integer(p) * v_op(h2, p) - ppow(p, s) * h1 - ppow(p, s2 + k) * v_op(f, p);
  return equal_to_precision(lhs, rhs);
}

}  // namespace whmf
