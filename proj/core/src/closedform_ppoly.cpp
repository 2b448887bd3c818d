#include <cmath>

#include "oscint/closedform.hpp"
#include "oscint/detail/closedform_internal.hpp"
#include "oscint/specfun.hpp"

namespace oscint::closedform {

using detail::BigComplex;
using detail::BigFloat;

namespace detail_cf {

std::vector<BigComplex> phi0_big(int r_max) {
  std::vector<BigComplex> phi(r_max + 1);
  if (r_max >= 1)
    phi[1] = BigComplex(BigFloat(0), detail::big_euler() + detail::big_log2() / 2);
  BigFloat fact = 1;  // (r-1)!
  for (int r = 2; r <= r_max; ++r) {
    fact *= (r - 1);
    BigFloat v = fact * detail::big_zeta(r);
    // phi^{(r)}(0) = -(-i)^r (r-1)! zeta(r)
    switch (r % 4) {
      case 0: phi[r] = BigComplex(-v, BigFloat(0)); break;
      case 1: phi[r] = BigComplex(BigFloat(0), v); break;
      case 2: phi[r] = BigComplex(v, BigFloat(0)); break;
      case 3: phi[r] = BigComplex(BigFloat(0), -v); break;
    }
  }
  return phi;
}

std::vector<BigComplex> complete_bell_ladder(std::span<const BigComplex> x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> binom(n + 1, std::vector<double>(n + 1, 0.0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1.0;
    for (int b = 1; b <= a; ++b)
      binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0.0);
  }
  std::vector<BigComplex> bell(n + 1);
  bell[0] = BigComplex(1.0);
  for (int m = 0; m < n; ++m) {
    BigComplex s;
    for (int j = 0; j <= m; ++j) s += BigFloat(binom[m][j]) * bell[m - j] * x[j];
    bell[m + 1] = s;
  }
  return bell;
}

BigComplex p_poly0_big(int n, int m, std::span<const BigComplex> bell) {
  if (m < 0 || n < m) return BigComplex();
  // (-i)^m
  BigComplex im;
  switch (((m % 4) + 4) % 4) {
    case 0: im = BigComplex(1.0); break;
    case 1: im = BigComplex(0.0, -1.0); break;
    case 2: im = BigComplex(-1.0); break;
    case 3: im = BigComplex(0.0, 1.0); break;
  }
  if (n == m) return im;
  double b = 1.0;
  for (int i = 1; i <= m; ++i) b = b * (n - m + i) / i;  // C(n, m)
  return im * BigFloat(b) * bell[n - m];
}

unsigned ray_digits(double tau, int k_orders) {
  double d = 36.0 + 0.21715 * (2.0 * tau * tau) + 2.0 * k_orders;
  if (d > 40000.0) throw std::range_error("ray_digits: tau too large");
  return static_cast<unsigned>(d) + 1;
}

}  // namespace detail_cf

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::explicit_k: return "explicit_k";
    case Method::ode: return "ode";
    case Method::quadrature: return "quadrature";
  }
  return "?";
}

Complex phi_r(int r, double nu) {
  require_finite(nu, "phi_r");
  if (r < 1) throw std::domain_error("phi_r: requires r >= 1");
  if (r == 1) {
    Complex psi = specfun::polygamma_line(0, nu);
    return Complex(0.0, -1.0) * (psi - 0.5 * 0.69314718055994530942);
  }
  Complex psi = specfun::polygamma_line(r - 1, nu);
  static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return -ipow[r % 4] * psi;
}

double phi_index(double nu) {
  require_finite(nu, "phi_index");
  if (nu >= 0.0) throw std::domain_error("phi_index: requires nu < 0");
  return specfun::polygamma(0, -nu) - 0.5 * 0.69314718055994530942;
}

Complex p_poly(const PPolyKey& key) {
  if (key.m < 0 || key.n < key.m) return Complex(0.0, 0.0);
  static const Complex mi_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};  // (-i)^m
  Complex im = mi_pow[key.m % 4];
  if (key.n == key.m) return im;
  const int nm = key.n - key.m;
  std::vector<Complex> phis(nm);
  for (int r = 1; r <= nm; ++r) phis[r - 1] = phi_r(r, key.nu);
  Complex bell = specfun::bell_complete(nm, phis);
  double binom = 1.0;
  for (int i = 1; i <= key.m; ++i) binom = binom * (key.n - key.m + i) / i;
  return im * binom * bell;
}

}  // namespace oscint::closedform
