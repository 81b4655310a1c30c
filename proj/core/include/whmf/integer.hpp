#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace whmf {

/// Arbitrary-precision integer. All series coefficients and all verified
/// congruence values live in this type; the intermediate values of the
/// verified expansions reach sizes well beyond 2^128.
using Integer = mpz_class;

/// 2^e as an Integer.
inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

/// Integer power with nonnegative exponent.
inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// A natural number extended with infinity; the value domain of 2-adic
/// valuations and of congruence claims.
struct ExtendedNat {
  bool infinite = false;
  long value = 0;  // meaningful only when !infinite

  static ExtendedNat inf() { return ExtendedNat{true, 0}; }
  static ExtendedNat of(long v) { return ExtendedNat{false, v}; }

  friend bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator>=(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.infinite) return true;
    if (b.infinite) return false;
    return a.value >= b.value;
  }
  bool operator>=(long v) const { return infinite || value >= v; }

  /// "inf" or the decimal value; used verbatim in reports.
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

/// Largest e with 2^e | x; infinity for x = 0.
inline ExtendedNat two_adic_valuation(const Integer& x) {
  if (sgn(x) == 0) return ExtendedNat::inf();
  return ExtendedNat::of(static_cast<long>(mpz_scan1(x.get_mpz_t(), 0)));
}

}  // namespace whmf
