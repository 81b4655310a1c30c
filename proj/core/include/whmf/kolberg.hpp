#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "whmf/qseries.hpp"

namespace whmf {

/// Exponent vector of a monomial in q and the Kolberg functions.  The
/// comparison order (eq, eQ, eR, eS, eT, e2, e4, e8, e1) is also the
/// rendering order.  e1 is the exponent of phi(q); canonical expressions
/// keep e1 == 0 (normalize_phi1 rewrites it away).
struct KolbergExponents {
  int eq = 0;  // q
  int eQ = 0;  // Q = prod(1+q^k) = phi(q^2)/phi(q)
  int eR = 0;  // R = Q(q^2)
  int eS = 0;  // S = R(q^2)
  int eT = 0;  // T = S(q^2)
  int e2 = 0;  // phi(q^2)
  int e4 = 0;  // phi(q^4)
  int e8 = 0;  // phi(q^8)
  int e1 = 0;  // phi(q)

  friend auto operator<=>(const KolbergExponents&, const KolbergExponents&) = default;
};

/// One term: coefficient times a product of integer powers of the
/// generators.  coefficient != 0 inside canonical expressions.
struct KolbergMonomial {
  Integer coefficient;
  KolbergExponents exponents;
};

/// Formal integer-linear combination of Kolberg monomials, kept canonical:
/// no zero coefficients, no duplicate exponent vectors.  The imaginary unit
/// never appears: sine values are stored as i*sin(k alpha), which is an
/// integer expression.
class KolbergExpr {
 public:
  using Terms = std::map<KolbergExponents, Integer>;

  KolbergExpr() = default;

  static KolbergExpr zero() { return KolbergExpr(); }
  static KolbergExpr constant(Integer c);
  static KolbergExpr monomial(Integer c, const KolbergExponents& e);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Adds c * q^... in place (merging and dropping zeros).
  void add_term(const KolbergExponents& e, const Integer& c);

  friend KolbergExpr operator+(const KolbergExpr& a, const KolbergExpr& b);
  friend KolbergExpr operator-(const KolbergExpr& a, const KolbergExpr& b);
  friend KolbergExpr operator-(const KolbergExpr& a);
  friend KolbergExpr operator*(const KolbergExpr& a, const KolbergExpr& b);
  friend KolbergExpr operator*(const Integer& c, const KolbergExpr& a);
  friend bool operator==(const KolbergExpr& a, const KolbergExpr& b) = default;

 private:
  Terms terms_;
};

/// a^n; for n < 0 the base must be a single monomial with coefficient +1/-1.
KolbergExpr pow(const KolbergExpr& a, int n);

/// Rewrites every phi(q)^n factor as phi(q^2)^n Q^-n.
KolbergExpr normalize_phi1(const KolbergExpr& e);

/// Rewrites every phi(q^2)^n factor as phi(q^4)^n R^-n.  Useful for
/// presenting even-dissected expressions over the doubled alphabet
/// {q^2, phi(q^4), phi(q^8), R, S, T}, the form the halving step consumes.
KolbergExpr normalize_phi2(const KolbergExpr& e);

/// cos(k*alpha) in Kolberg functions, k >= 1.  Odd k goes through Chebyshev
/// polynomials in cos(alpha); k == 2 mod 4 through cos(2 alpha) = R^8 S^-4;
/// k == 0 mod 4 through polynomials in sin^2(2 alpha) = -16 q^2 R^8 S^8.
KolbergExpr expand_cos(int k);

/// i*sin(k*alpha), k >= 1, with the imaginary unit absorbed:
/// i sin(alpha) = 2qR^2ST^2, i sin(2a) = 4qR^4S^4, i sin(4a) = 8qR^12.
KolbergExpr expand_isin(int k);

enum class Parity { even, odd };

/// The requested-parity part of the expression's q-expansion, computed
/// symbolically: Q^2k contributes R^k cos(k a) to the even series and
/// R^k i sin(k a) to the odd one.  Throws OddQExponent if any monomial has
/// an odd exponent of Q after normalize_phi1.
KolbergExpr dissect(const KolbergExpr& e, Parity parity);

/// Replaces every coefficient by its least nonnegative residue mod 2^N.
KolbergExpr reduce_mod_pow2(const KolbergExpr& e, unsigned N);

/// The substitution q^2 -> q on an even-series expression:
/// q^2e -> q^e, R -> Q, S -> R, T -> S, phi(q^4) -> phi(q^2),
/// phi(q^8) -> phi(q^4), phi(q^2) -> phi(q^2) Q^-1.
/// Throws OddExponentOfQ if a q-exponent is odd; the input must not
/// contain Q or phi(q) factors (they have no even-series meaning here).
KolbergExpr halve(const KolbergExpr& e);

/// Numeric oracle: expands every generator as a truncated product and
/// evaluates the expression to the given precision.
QSeries to_qseries(const KolbergExpr& e, long precision);

/// Coefficient split of a plain series by exponent parity (no reindexing).
QSeries dissect_numeric(const QSeries& f, Parity parity);

/// Parses the expression mini-language:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' signedInt)?
///   atom   := unsignedInt | 'q' | 'phi1' | 'phi2' | 'phi4' | 'phi8'
///           | 'Q' | 'R' | 'S' | 'T' | '(' expr ')'
/// Division requires a single-monomial divisor and exact coefficient
/// division.  Throws ParseError.
KolbergExpr parse_kolberg(std::string_view text);

/// Renders in the same grammar, monomials in exponent order.
std::string render(const KolbergExpr& e);

}  // namespace whmf
