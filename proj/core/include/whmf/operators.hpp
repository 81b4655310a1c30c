#pragma once

#include "whmf/qseries.hpp"

namespace whmf {

/// delta_{x,y}: 1 if y | x, else 0.
struct DivIndicator {
  Integer x;
  Integer y;
  int value;
  DivIndicator(Integer x_, Integer y_);
};

/// (f|T_p) = (f|U_p) + p^{k-1}(f|V_p); requires weight k >= 1 so that the
/// scalar stays integral.  Result precision is that of f|U_p.
QSeries hecke_t(const QSeries& f, int p, int k);

/// The coefficient relation of the single Hecke application:
/// a_k(m/p,n) + a_k(m,p) tau_k(n) + p^{k-1} a_k(mp,n)
///   == a_k(m,np) + p^{k-1} a_k(m,n/p),
/// with the zero conventions absorbing fractional indices.
bool check_hecke_relation(int k, long m, long n, int p = 2);

/// The corresponding relation for T_p applied twice.
bool check_hecke_squared_relation(int k, long m, long n, int p = 2);

/// Operator-algebra consistency of the U_p pole-swap formula:
/// -f + p(f|U_p|V_p) + p^k(f|V_p|V_p) == p(f|T_p|V_p) - f.
/// For weights k < 1 both sides are scaled by p^{1-k} to stay integral.
bool check_thm41_identity(const QSeries& f, int p, int k);

/// The same consistency for U_{p^2}:
/// -f_p + p f_{p^2}(pz) - p^{k-1} f(pz) + p^k f_p(p^2 z) + p^{2k-1} f(p^3 z)
///   == p(f|T_p|T_p|V_p) - f|T_p - p^k(f|V_p),
/// scaled by p^{2(1-k)} for weights below 1.
bool check_thm42_identity(const QSeries& f, int p, int k);

}  // namespace whmf
