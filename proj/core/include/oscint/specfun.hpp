#pragma once

// Self-contained special-function kernel: gamma/polygamma, Bell polynomials,
// Fresnel integrals, the complex error function, the Weber parabolic cylinder
// function D_nu(z) and its index-derivative generalizations, and the
// 2F2(1,1;b1,b2;w) hypergeometric series.

#include <span>
#include <vector>

#include "oscint/types.hpp"

namespace oscint::specfun {

// Gamma(x) for x > 0 to at least 12 significant digits. Half-integer and
// integer arguments are computed exactly from Gamma(1/2) = sqrt(pi) and
// Gamma(1) = 1 by the recurrence; everything else goes through a Lanczos fit.
double gamma_positive(double x);

// psi^{(r)}(x) for real x > 0.
double polygamma(int r, double x);

// psi^{(r)}(1 + i*t) for real t. This is the only complex polygamma line the
// library exposes; general complex arguments are rejected by design.
Complex polygamma_line(int r, double t);

// Partial Bell polynomial B_{n,j}(x_1, ..., x_{n-j+1}); exact recurrence.
// Generic over the coefficient ring (complex numerics or the symbolic ring).
template <class Ring>
Ring bell_partial_t(int n, int j, std::span<const Ring> x) {
  if (j < 1 || j > n) throw std::domain_error("bell_partial: requires 1 <= j <= n");
  if (static_cast<int>(x.size()) < n - j + 1)
    throw std::domain_error("bell_partial: needs n-j+1 arguments");
  // B_{n,j} = sum_i C(n-1, i-1) x_i B_{n-i, j-1}
  std::vector<std::vector<Ring>> tab(n + 1, std::vector<Ring>(j + 1, Ring{}));
  tab[0][0] = Ring{1};
  std::vector<std::vector<double>> binom(n + 1, std::vector<double>(n + 1, 0.0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1.0;
    for (int b = 1; b <= a; ++b)
      binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0.0);
  }
  for (int nn = 1; nn <= n; ++nn)
    for (int jj = 1; jj <= std::min(nn, j); ++jj) {
      Ring acc{};
      for (int i = 1; i <= nn - jj + 1; ++i) {
        if (i > static_cast<int>(x.size())) break;
        acc = acc + Ring{binom[nn - 1][i - 1]} * x[i - 1] * tab[nn - i][jj - 1];
      }
      tab[nn][jj] = acc;
    }
  return tab[n][j];
}

Complex bell_partial(int n, int j, std::span<const Complex> x);

// Complete Bell polynomial B_n(x_1, ..., x_n) = sum_j B_{n,j}.
Complex bell_complete(int n, std::span<const Complex> x);

// Fresnel integrals in the normalization with C(inf) = S(inf) = 1/2,
// i.e. C(x) = int_0^x cos(pi t^2 / 2) dt and likewise with sin.
struct FresnelPair {
  double c;
  double s;
};
FresnelPair fresnel(double x);

// erf(z) for complex z, accurate to >= 10 significant digits on the rays
// proportional to e^{+-i pi/4} and on the real axis. Overflow guard:
// arguments with Re(z^2) < -700 raise std::range_error.
Complex erf_complex(Complex z);

// Weber function D_nu(z) by the absolutely convergent series
//   D_nu(z) = e^{-z^2/4}/Gamma(-nu) sum_n (-z)^n/n! 2^{(n-nu-2)/2} Gamma((n-nu)/2),
// valid for Re(nu) < 0. Internally evaluated with enough working precision to
// absorb the exp(|z|^2/2) cancellation on oscillatory rays.
Complex pcf_series(Complex nu, Complex z, const SeriesTruncation& trunc = {});

// k-th derivative of Gamma((n - nu)/2) with respect to nu;
// (-1/2)^k Gamma * sum_j B_{k,j}(psi^{(0)}, ..., psi^{(k-1)}).
// k >= 1 requires real nu (complex polygamma is rejected by design).
Complex gamma_index_deriv(int k, int n, Complex nu);

// Modified Weber function D^(k)_nu(z): the series above with Gamma((n-nu)/2)
// replaced by its k-th index derivative. D^(0) is the ordinary D_nu.
Complex pcf_modified(const ModifiedPcfSpec& spec);

// All orders k = 0..k_max in one pass over the shared series.
std::vector<Complex> pcf_modified_family(int k_max, Complex nu, Complex z,
                                         const SeriesTruncation& trunc = {});

// Independent quadrature route for D_nu(z) through the integral
// representation int_0^inf e^{-xz-x^2/2} x^{-nu-1} dx, Re(nu) < 0.
// The integrand is cut at x = 12 + 2.5 |z| where the tail is below 1e-15.
Complex pcf_via_integral(Complex nu, Complex z);

// 2F2(1,1; b1,b2; w) by direct term recurrence.
Complex hyp2f2_11(double b1, double b2, Complex w, const SeriesTruncation& trunc = {});

// R(tau) = (pi/4) erf(mu0 tau / sqrt(2)) + (tau^2/2) 2F2(3/2, 2, i tau^2).
// Antiderivative kernel for the first-order integrals: d/dtau [i mu0 R(tau)]
// equals e^{i tau^2/2} D_{-1}(-i mu0 tau).
Complex r_function(double tau);

}  // namespace oscint::specfun
