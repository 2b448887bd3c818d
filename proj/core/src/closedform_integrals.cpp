#include <cmath>

#include "oscint/closedform.hpp"
#include "oscint/detail/closedform_internal.hpp"
#include "oscint/detail/pcf_internal.hpp"
#include "oscint/specfun.hpp"

namespace oscint::closedform {

using detail::BigComplex;
using detail::BigFloat;
using detail::PrecisionGuard;
using detail_cf::complete_bell_ladder;
using detail_cf::p_poly0_big;
using detail_cf::phi0_big;
using detail_cf::ray_digits;

namespace {

constexpr double kPi = 3.14159265358979323846;

double binom_d(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Weber family on the crossing ray at full precision; tol drives both the
// series tail and the a-posteriori cancellation check.
std::vector<BigComplex> ray_family(int k_max, double tau, double tol,
                                   Complex nu = Complex(-1.0, 0.0)) {
  SeriesTruncation tr;
  tr.abs_tol = tol;
  return specfun::detail_pcf::family_big(k_max, nu, ray_arg(tau), tr, tol);
}

// sum_{j=0}^{n} sum_{a=0}^{n-j} sum_{b=0}^{j} C(n,j) P_{n-j,a} conj(P_{j,b})
//   * D^{(base+a)}(-i mu0 tau) * D^{(base+b)}(i mu0bar tau)
// with the second factor supplied as the conjugate of the first family.
BigComplex modsq_deriv_big(int n, int base, std::span<const BigComplex> fam,
                           std::span<const BigComplex> bell) {
  BigComplex acc;
  for (int j = 0; j <= n; ++j) {
    BigFloat cj(binom_d(n, j));
    for (int a = 0; a <= n - j; ++a) {
      BigComplex pa = p_poly0_big(n - j, a, bell);
      for (int b = 0; b <= j; ++b) {
        BigComplex pb = detail::conj(p_poly0_big(j, b, bell));
        acc += cj * pa * pb * fam[base + a] * detail::conj(fam[base + b]);
      }
    }
  }
  return acc;
}

}  // namespace

Complex j_n(int n, double tau) {
  require_finite(tau, "j_n");
  if (n < 0) throw std::domain_error("j_n: requires n >= 0");
  PrecisionGuard guard(ray_digits(tau, n));
  double tol = 1e-18;
  auto fam = ray_family(n, tau, tol);
  auto phi = phi0_big(n);
  std::vector<BigComplex> phiseq(phi.begin() + 1, phi.end());
  auto bell = complete_bell_ladder(phiseq);
  return modsq_deriv_big(n, 0, fam, bell).to_complex();
}

IntegralValue i_k(int k, double tau) {
  require_finite(tau, "i_k");
  if (k < 1) throw std::domain_error("i_k: requires k >= 1");
  const double tol = std::pow(10.0, -(16.0 + 1.5 * k));
  PrecisionGuard guard(ray_digits(tau, k) + static_cast<unsigned>(2 * k));

  auto fam = ray_family(k - 1, tau, tol);
  auto phi = phi0_big(k - 1);
  std::vector<BigComplex> phiseq(phi.begin() + 1, phi.end());
  auto bell = complete_bell_ladder(phiseq);

  // I_k = pi^{k-1}/2^{4k-2} sum_{n=0}^{k-1} (-2/pi)^n / (n! (k-n-1)!) J_n
  BigFloat pi = detail::big_pi();
  BigComplex acc;
  BigFloat scale = 0;
  BigFloat w = 1;  // (-2/pi)^n / n!
  BigFloat fact_rest = 1;
  for (int i = 2; i <= k - 1; ++i) fact_rest *= i;  // (k-1)!
  for (int n = 0; n <= k - 1; ++n) {
    BigComplex jn = modsq_deriv_big(n, 0, fam, bell);
    BigFloat coeff = w / fact_rest;
    acc += coeff * jn;
    scale += abs(coeff) * detail::abs1(jn);
    w = w * (-2 / pi) / (n + 1);
    if (k - n - 2 >= 1) fact_rest /= (k - n - 2 + 1);  // -> (k-n-2)!
  }
  BigFloat pref = pow(pi, k - 1) / pow(BigFloat(2), 4 * k - 2);
  acc = pref * acc;
  scale = pref * scale;

  double im = static_cast<double>(acc.im);
  if (std::abs(im) > 1e-9)
    throw InternalConsistencyError("i_k: imaginary residue above 1e-9");

  IntegralValue out;
  out.k = k;
  out.tau = tau;
  out.value = static_cast<double>(acc.re);
  out.method = Method::closed_form;
  out.err_estimate = 4.0 * tol * static_cast<double>(scale) + std::abs(im);
  return out;
}

IntegralValue i_k_explicit(int k, double tau) {
  require_finite(tau, "i_k_explicit");
  if (k < 1 || k > 5)
    throw std::domain_error("i_k_explicit: requires 1 <= k <= 5");
  auto fam = specfun::pcf_modified_family(k - 1, Complex(-1.0, 0.0), ray_arg(tau));
  auto A = [&](int a) { return std::norm(fam[a]); };
  auto RE = [&](int a, int b) { return (fam[a] * std::conj(fam[b])).real(); };
  auto IM = [&](int a, int b) { return (fam[a] * std::conj(fam[b])).imag(); };
  const double p = kPi;
  double v = 0.0;
  switch (k) {
    case 1:
      v = 0.25 * A(0);
      break;
    case 2:
      v = (p * A(0) + 4.0 * IM(0, 1)) / 64.0;
      break;
    case 3:
      v = (1.75 * p * p * A(0) + 6.0 * A(1) + 6.0 * p * IM(0, 1) - 6.0 * RE(0, 2)) /
          (256.0 * 6.0);
      break;
    case 4:
      v = (2.5 * p * p * p * A(0) + 12.0 * p * A(1) + 14.0 * p * p * IM(0, 1) +
           24.0 * IM(1, 2) - 8.0 * IM(0, 3) - 12.0 * p * RE(0, 2)) /
          (2048.0 * 24.0);
      break;
    case 5:
      v = ((61.0 / 16.0) * p * p * p * p * A(0) + 35.0 * p * p * A(1) + 30.0 * A(2) +
           25.0 * p * p * p * IM(0, 1) + 60.0 * p * IM(1, 2) - 20.0 * p * IM(0, 3) -
           35.0 * p * p * RE(0, 2) - 40.0 * RE(1, 3) + 10.0 * RE(0, 4)) /
          (16384.0 * 120.0);
      break;
  }
  IntegralValue out;
  out.k = k;
  out.tau = tau;
  out.value = v;
  out.method = Method::explicit_k;
  out.err_estimate = 1e-12 * std::max(1.0, std::abs(v));
  return out;
}

double d_modsq_deriv(int n, int k, double tau) {
  require_finite(tau, "d_modsq_deriv");
  if (n < 0 || k < 0) throw std::domain_error("d_modsq_deriv: requires n, k >= 0");
  PrecisionGuard guard(ray_digits(tau, n + k));
  auto fam = ray_family(n + k, tau, 1e-18);
  auto phi = phi0_big(n);
  std::vector<BigComplex> phiseq(phi.begin() + 1, phi.end());
  auto bell = complete_bell_ladder(phiseq);
  BigComplex m = modsq_deriv_big(n, k, fam, bell);
  double im = static_cast<double>(m.im);
  double re = static_cast<double>(m.re);
  if (std::abs(im) > 1e-9 * std::max(1.0, std::abs(re)))
    throw InternalConsistencyError("d_modsq_deriv: imaginary residue");
  return re;
}

double plz(double tau, double nu) {
  require_finite(tau, "plz");
  require_finite(nu, "plz");
  if (nu < 0.0) throw std::domain_error("plz: requires nu >= 0");
  if (nu == 0.0) return 0.0;
  PrecisionGuard guard(ray_digits(tau, 0));
  auto fam = ray_family(0, tau, 1e-18, Complex(-1.0, -nu));
  BigFloat p = nu * boost::multiprecision::exp(-detail::big_pi() * nu / 2) *
               detail::norm(fam[0]);
  double v = static_cast<double>(p);
  if (v < -1e-9 || v > 1.0 + 1e-9)
    throw InternalConsistencyError("plz: probability outside [0,1] slack");
  return v;
}

IntegralValue i_k_from_plz(int k, double tau) {
  require_finite(tau, "i_k_from_plz");
  if (k < 1) throw std::domain_error("i_k_from_plz: requires k >= 1");
  const double tol = std::pow(10.0, -(16.0 + 1.5 * k));
  double value;
  {
    PrecisionGuard guard(ray_digits(tau, k) + static_cast<unsigned>(2 * k));
    auto fam = ray_family(k - 1, tau, tol);
    auto phi = phi0_big(k - 1);
    std::vector<BigComplex> phiseq(phi.begin() + 1, phi.end());
    auto bell = complete_bell_ladder(phiseq);

    // d^k P / d nu^k |_0 = sum_{n<k} C(k,n) (-pi/2)^{k-n} (-2(k-n)/pi) M_n
    BigFloat pi = detail::big_pi();
    BigComplex acc;
    for (int n = 0; n <= k - 1; ++n) {
      BigComplex mn = modsq_deriv_big(n, 0, fam, bell);
      BigFloat c = BigFloat(binom_d(k, n)) * pow(-pi / 2, k - n) *
                   (BigFloat(-2.0 * (k - n)) / pi);
      acc += c * mn;
    }
    // I_k = (-1)^{k+1} / (2^{3k-1} k!) * d^k P
    BigFloat fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    BigFloat pref = 1 / (pow(BigFloat(2), 3 * k - 1) * fact);
    if (k % 2 == 0) pref = -pref;
    acc = pref * acc;
    double im = static_cast<double>(acc.im);
    if (std::abs(im) > 1e-9)
      throw InternalConsistencyError("i_k_from_plz: imaginary residue");
    value = static_cast<double>(acc.re);
  }
  IntegralValue direct = i_k(k, tau);
  if (std::abs(value - direct.value) > 1e-8)
    throw InternalConsistencyError(
        "i_k_from_plz: disagreement with the direct route beyond 1e-8");
  IntegralValue out = direct;
  out.value = value;
  out.method = Method::closed_form;
  out.err_estimate = std::max(direct.err_estimate, std::abs(value - direct.value));
  return out;
}

KnownLimits known_limits(int k) {
  if (k < 1) throw std::domain_error("known_limits: requires k >= 1");
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  double pik = std::pow(kPi, k);
  return {pik / (std::pow(2.0, 3 * k) * fact), pik / (std::pow(2.0, 2 * k - 1) * fact)};
}

}  // namespace oscint::closedform
