#pragma once

// Closed-form evaluation of the nested oscillatory integrals I_k(tau): the
// P-polynomial coefficients, the J_n building blocks, the assembled I_k, the
// index-derivatives of |D|^2, and the finite-time level-crossing probability.

#include <utility>
#include <vector>

#include "oscint/types.hpp"

namespace oscint::closedform {

enum class Method { closed_form, explicit_k, ode, quadrature };

const char* method_name(Method m);

struct IntegralValue {
  int k = 0;
  double tau = 0.0;
  double value = 0.0;
  Method method = Method::closed_form;
  double err_estimate = 0.0;
};

struct PPolyKey {
  int n = 0;
  int m = 0;
  double nu = 0.0;  // evaluation point of the index family; 0 is the standard case
};

// phi^{(1)}(nu) = -i (psi^{(0)}(1 + i nu) - ln2/2);
// phi^{(r)}(nu) = -(i^r) psi^{(r-1)}(1 + i nu) for r > 1. Real nu only.
Complex phi_r(int r, double nu);

// phi_nu = psi^{(0)}(-nu) - ln2/2 for real nu < 0 (index-derivative shift).
double phi_index(double nu);

// P_{n,m}(nu) = (-i)^m C(n,m) B_{n-m}(phi^{(1)}, ..., phi^{(n-m)});
// zero for n < m or m < 0, (-i)^n for n = m.
Complex p_poly(const PPolyKey& key);

// J_n(tau): the double sum over P-coefficients and modified Weber values at
// the crossing rays. J_0 = |D_{-1}(-i mu0 tau)|^2.
Complex j_n(int n, double tau);

// I_k(tau) assembled from J_0..J_{k-1}; the n = k term carries 1/(-1)! = 0.
IntegralValue i_k(int k, double tau);

// Hard-coded low-order closed forms (k = 1..5) on the Weber-product basis.
IntegralValue i_k_explicit(int k, double tau);

// n-th index-derivative of |D^(k)_{-i nu - 1}(-i mu0 tau)|^2 at nu = 0.
double d_modsq_deriv(int n, int k, double tau);

// Finite-time level-crossing transition probability
// P(tau, nu) = nu e^{-pi nu/2} |D_{-i nu - 1}(-i mu0 tau)|^2, nu >= 0.
double plz(double tau, double nu);

// I_k(tau) recovered from the nu-Taylor coefficients of P(tau, nu); checks
// itself against i_k to 1e-8 and raises InternalConsistencyError on mismatch.
IntegralValue i_k_from_plz(int k, double tau);

// Exact reference values (I_k at the crossing, I_k at infinite time).
struct KnownLimits {
  double at_zero;
  double at_infinity;
};
KnownLimits known_limits(int k);

// First-order sine integral J1 via the antiderivative function R(tau),
// referenced at tau_ref (a finite stand-in; the lower limit of the nested
// integral diverges logarithmically, so every route fixes J1(tau_ref) = 0).
double j1_closed(double tau, double tau_ref = -40.0);

// First-order cosine integral in its Fresnel form, reference-free.
double i1_closed_fresnel(double tau);

// Real part of R(-inf); exact value -pi/8, exposed for the R-based I1 route.
double r_ref_real();

}  // namespace oscint::closedform
