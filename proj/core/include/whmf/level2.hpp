#pragma once

#include <vector>

#include "whmf/qseries.hpp"

namespace whmf {

/// S_4 = (E_4(z) - E_4(2z))/240, vanishing to order 1 at infinity.
QSeries s4(long precision);
/// S_6 = (E_6(z) - E_6(2z))/(-504).
QSeries s6(long precision);
/// T_4 = (2^4 E_4(2z) - E_4(z))/(2^4 - 1), vanishing to order 1 at the cusp 0.
QSeries t4(long precision);
/// T_6 = (2^6 E_6(2z) - E_6(z))/(2^6 - 1).
QSeries t6(long precision);

/// Phi = Delta(2z)/Delta(z): simple zero at infinity, simple pole at 0.
QSeries phi(long precision);
/// psi = 1/Phi.
QSeries psi(long precision);

/// alpha_k for even k < 0: holomorphic at infinity with constant term 1,
/// minimal-order pole at 0 (T_6/T_4^i or 1/T_4^i per k mod 4).
QSeries alpha(int k, long precision);
/// theta_k: the mirror form, holomorphic at 0 with a pole at infinity.
QSeries theta(int k, long precision);

/// theta_k(-1/(2z)) = mu_sign(k) * 2^mu_exponent(k) * z^k * alpha_k(z);
/// stored as metadata, the transformation itself is not expanded here.
int mu_exponent(int k);
int mu_sign(int k);

/// dim M_k(2) = 1 + floor(k/4) for even k >= 4.
int level2_dim(int k);

/// One member of a Table-1 style triangular basis of M_k(2).
struct Level2BasisElement {
  int weight;
  int index;  // 0-based position
  QSeries series;
  long vanishing_order;  // == index
};

/// The basis of M_k(2) for k in {12,16,18,20,22,26}: level2_dim(k) forms,
/// the i-th vanishing to exact order i at infinity with leading coefficient 1.
std::vector<Level2BasisElement> table1_basis(int k, long precision);

/// Expresses f over a triangular basis (strictly increasing valuations,
/// unit leading coefficients).  Throws NotInSpan if a residual survives to
/// the available precision, PrecisionExceeded if a pivot is unreadable.
std::vector<Integer> decompose_in_basis(const QSeries& f, const std::vector<QSeries>& basis);

}  // namespace whmf
