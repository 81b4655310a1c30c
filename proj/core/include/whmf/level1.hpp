#pragma once

#include <vector>

#include "whmf/qseries.hpp"

namespace whmf {

/// k = 12*ell + kprime with kprime in {0,4,6,8,10,14}; the pair is unique.
struct WeightDecomposition {
  int k;
  int ell;
  int kprime;
};

/// Decomposes any even weight. Throws UnsupportedWeight for odd k.
WeightDecomposition decompose_weight(int k);

/// Per-weight constants of the divisibility theorem, for the six weights
/// with dim M_k(1) == 2.  xi and mu belong to the dual weight 2-k.
struct WeightProfile {
  int k;
  int gamma;
  int rho;
  int chi;
  int nu;
  int eta;
  int omega;
  int xi;  // xi_{2-k}: alpha_{2-k} == 1 mod 2^xi
  int mu;  // mu_{2-k}: theta_{2-k}(-1/(2z)) = +/- 2^mu z^{2-k} alpha_{2-k}(z)
};

/// Profile lookup for k in {12,16,18,20,22,26}; throws UnsupportedWeight.
const WeightProfile& weight_profile(int k);

/// All six supported weights, ascending.
const std::vector<int>& supported_weights();

/// sigma_kpow(n): sum of kpow-th powers of the positive divisors of n.
Integer sigma(unsigned kpow, long n);

/// E_4 = 1 + 240 sum sigma_3(n) q^n, or E_6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(int w, long precision);

/// Delta = q prod (1-q^n)^24.
QSeries delta(long precision);

/// j = E_4^3 / Delta = q^-1 + 744 + 196884 q + ...
QSeries j_invariant(long precision);

/// prod (1 - q^n), Euler's function; the building block of Delta.
QSeries euler_phi(long precision);

/// The monic generator of the one-dimensional space M_kprime(1):
/// 1, E_4, E_6, E_4^2, E_4*E_6, E_4^2*E_6 for kprime = 0,4,6,8,10,14.
QSeries e_weight(int kprime, long precision);

/// Canonical basis element f_{k,m} = q^-m + O(q^{ell+1}); requires m >= -ell
/// (IndexBelowRange otherwise) and precision > ell.
QSeries canonical_basis(int k, long m, long precision);

/// The coefficient a_k(m,n): zero whenever m < -ell or n < ell+1 (the
/// paper's convention), otherwise the coefficient of q^n in f_{k,m}.
/// Total on integer pairs; expansion precision is raised internally.
Integer a_coefficient(int k, long m, long n);

/// Delta_k = Delta * e_weight(k-12), the unique normalized cusp form of
/// weight k in {12,16,18,20,22,26}; equals f_{k,-1}.
QSeries delta_k(int k, long precision);

/// tau_k(n): the n-th Fourier coefficient of Delta_k (0 for n < 1).
Integer tau_k(int k, long n);

}  // namespace whmf
