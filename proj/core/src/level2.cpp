#include "whmf/level2.hpp"

#include <string>

#include "whmf/level1.hpp"

namespace whmf {

namespace {

int pole_index(int k) {
  if (k >= 0 || k % 2 != 0) throw UnsupportedWeight("alpha/theta need even k < 0");
  const int r = ((k % 4) + 4) % 4;
  return r == 2 ? (6 - k) / 4 : -k / 4;
}

bool is_two_mod_four(int k) { return ((k % 4) + 4) % 4 == 2; }

}  // namespace

QSeries s4(long precision) {
  QSeries e = eisenstein(4, precision);
  return exact_divide((e - v_op(e, 2)).truncated(precision), 240);
}

QSeries s6(long precision) {
  QSeries e = eisenstein(6, precision);
  return exact_divide((e - v_op(e, 2)).truncated(precision), -504);
}

QSeries t4(long precision) {
  QSeries e = eisenstein(4, precision);
  return exact_divide((Integer(16) * v_op(e, 2) - e).truncated(precision), 15);
}

QSeries t6(long precision) {
  QSeries e = eisenstein(6, precision);
  return exact_divide((Integer(64) * v_op(e, 2) - e).truncated(precision), 63);
}

QSeries phi(long precision) {
  QSeries d = delta(precision + 3);
  return (v_op(d, 2) * invert(d)).truncated(precision);
}

QSeries psi(long precision) { return invert(phi(precision + 2)).truncated(precision); }

QSeries alpha(int k, long precision) {
  const int i = pole_index(k);
  const long work = precision + i + 2;
  if (is_two_mod_four(k)) return (t6(work) * pow(t4(work), -i)).truncated(precision);
  return pow(t4(work), -i).truncated(precision);
}

QSeries theta(int k, long precision) {
  const int i = pole_index(k);
  const long work = precision + 3 * i + 2;
  if (is_two_mod_four(k)) return (s6(work) * pow(s4(work), -i)).truncated(precision);
  return pow(s4(work), -i).truncated(precision);
}

int mu_exponent(int k) {
  pole_index(k);  // validates
  return is_two_mod_four(k) ? 3 - k : -k;
}

int mu_sign(int k) {
  pole_index(k);
  return is_two_mod_four(k) ? -1 : +1;
}

int level2_dim(int k) {
  if (k < 4 || k % 2 != 0) throw UnsupportedWeight("level2_dim needs even k >= 4");
  return 1 + k / 4;
}

std::vector<Level2BasisElement> table1_basis(int k, long precision) {
  weight_profile(k);  // restricts to the six weights
  const long P = precision;
  QSeries E4 = eisenstein(4, P);
  QSeries E6 = eisenstein(6, P);
  QSeries E42 = v_op(E4, 2).truncated(P);
  QSeries E62 = v_op(E6, 2).truncated(P);
  QSeries S4 = s4(P), S6 = s6(P);
  QSeries D = delta(P);
  QSeries Dk = delta_k(k, P);
  QSeries Dk2 = v_op(Dk, 2).truncated(P);

  std::vector<QSeries> rows;
  switch (k) {
    case 12:
      rows = {pow(E42, 3), D, v_op(D, 2).truncated(P), pow(S4, 3)};
      break;
    case 16:
      rows = {pow(E42, 4), Dk, Dk2, E4 * pow(S4, 3), pow(S4, 4)};
      break;
    case 18:
      rows = {pow(E42, 3) * E62, Dk, Dk2, pow(S4, 3) * E6, pow(S4, 3) * S6};
      break;
    case 20:
      rows = {pow(E42, 5), Dk, Dk2, pow(S4, 3) * pow(E4, 2), pow(S4, 4) * E4, pow(S4, 5)};
      break;
    case 22:
      rows = {pow(E42, 4) * E62, Dk, Dk2, pow(S4, 3) * E4 * E6, pow(S4, 4) * E6,
              pow(S4, 4) * S6};
      break;
    case 26:
      rows = {pow(E42, 5) * E62,        Dk,  Dk2, pow(S4, 3) * pow(E4, 2) * E6,
              pow(S4, 4) * E4 * E6, pow(S4, 5) * E6, pow(S4, 5) * S6};
      break;
    default:
      throw UnsupportedWeight("table1_basis: weight " + std::to_string(k));
  }

  std::vector<Level2BasisElement> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    QSeries s = rows[i].truncated(P);
    out.push_back(Level2BasisElement{k, static_cast<int>(i), std::move(s),
                                     static_cast<long>(i)});
  }
  return out;
}

std::vector<Integer> decompose_in_basis(const QSeries& f, const std::vector<QSeries>& basis) {
  QSeries g = f;
  std::vector<Integer> out;
  out.reserve(basis.size());
  for (const QSeries& b : basis) {
    Integer c = g.coeff(b.valuation());  // throws PrecisionExceeded if unreadable
    if (b.coeff(b.valuation()) == -1) c = -c;
    out.push_back(c);
    if (sgn(c) != 0) g = g - c * b;
  }
  if (!g.is_zero()) {
    throw NotInSpan("residual of order " + std::to_string(g.valuation()) +
                    " survives to precision " + std::to_string(g.precision()));
  }
  return out;
}

}  // namespace whmf
