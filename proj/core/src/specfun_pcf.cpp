#include <algorithm>
#include <cmath>

#include "oscint/detail/mp.hpp"
#include "oscint/detail/pcf_internal.hpp"
#include "oscint/detail/quad.hpp"
#include "oscint/specfun.hpp"

namespace mp = boost::multiprecision;

namespace oscint::specfun {

using detail::BigComplex;
using detail::BigFloat;
using detail::PrecisionGuard;

namespace {

// Working precision for the Weber series: the partial sums reach
// ~exp(|z|^2/2) before collapsing to an O(1)-scale result on the oscillatory
// rays, so precision scales with |z|^2.
unsigned series_digits(const Complex& z, double tol, int extra_digits) {
  double zn = std::norm(z);
  double tol_digits = -std::log10(std::clamp(tol, 1e-60, 1e-6));
  double d = 8.0 + 0.21715 * zn + tol_digits + extra_digits;
  if (d > 40000.0)
    throw std::range_error("pcf series: |z| too large for the series route");
  return static_cast<unsigned>(d) + 1;
}

struct FamilyAccum {
  std::vector<BigComplex> sums;
  std::vector<BigFloat> max_term;
  std::int64_t terms = 0;
};

// Sums the series family at the current working precision. The coefficient
// stream is Gamma((n-nu)/2) and its first k_max index derivatives, produced
// by two interleaved ladders (n even / n odd) advanced in steps of one.
FamilyAccum family_sum(int k_max, Complex nu_c, Complex z_c,
                       const SeriesTruncation& tr, double tol) {
  const bool real_nu = (nu_c.imag() == 0.0);
  if (!real_nu && k_max > 0)
    throw std::domain_error(
        "pcf_modified: index-derivative orders require a real index");

  FamilyAccum acc;
  acc.sums.assign(k_max + 1, BigComplex());
  acc.max_term.assign(k_max + 1, BigFloat(0));

  BigComplex z(z_c);
  BigComplex mz = -z;
  BigFloat sqrt2 = sqrt(BigFloat(2));

  // binomials for the complete Bell recurrence
  std::vector<std::vector<double>> binom(k_max + 1, std::vector<double>(k_max + 1, 0.0));
  for (int a = 0; a <= k_max; ++a) {
    binom[a][0] = 1.0;
    for (int b = 1; b <= a; ++b)
      binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0.0);
  }

  // t_n = (-z)^n / n! * 2^{(n - nu - 2)/2}; advanced by t *= -z*sqrt(2)/(n+1).
  // Real and complex index versions share the loop via two ladder variants.
  BigComplex t;
  {
    BigComplex e = BigComplex(-0.5) * (BigComplex(nu_c) + BigComplex(2.0));
    // 2^{(-nu-2)/2} = exp(e * log 2)
    t = detail::exp(detail::big_log2() * e);
  }

  std::vector<BigFloat> gam_r(2), xcur_r(2);
  std::vector<std::vector<BigFloat>> psi(2);
  std::vector<BigComplex> gam_c(2);
  std::vector<BigComplex> xcur_c(2);
  if (real_nu) {
    double nu = nu_c.real();
    for (int p = 0; p < 2; ++p) {
      xcur_r[p] = BigFloat(p - nu) / 2;
      gam_r[p] = mp::tgamma(xcur_r[p]);
      if (k_max >= 1) psi[p] = detail::polygamma_big(k_max - 1, xcur_r[p]);
    }
  } else {
    for (int p = 0; p < 2; ++p) {
      xcur_c[p] = BigComplex(0.5 * (p - nu_c.real()), -0.5 * nu_c.imag());
      gam_c[p] = detail::gamma_big(xcur_c[p]);
    }
  }

  std::vector<BigFloat> bell(k_max + 1);
  std::vector<BigFloat> half_pow(k_max + 1);  // (-1/2)^k
  half_pow[0] = 1;
  for (int k = 1; k <= k_max; ++k) half_pow[k] = half_pow[k - 1] * BigFloat(-0.5);

  int consecutive_small = 0;
  for (std::int64_t n = 0;; ++n) {
    if (n > tr.max_terms) {
      Complex partial = acc.sums[0].to_complex();
      throw ConvergenceError("pcf series: max_terms exceeded", partial, n,
                             static_cast<double>(detail::abs1(t)));
    }
    const int p = static_cast<int>(n & 1);
    acc.terms = n + 1;

    bool all_small = true;
    if (real_nu) {
      // complete Bell values over psi^{(0..k-1)}(x_n)
      bell[0] = 1;
      for (int m = 0; m < k_max; ++m) {
        BigFloat s = 0;
        for (int j = 0; j <= m; ++j) s += binom[m][j] * bell[m - j] * psi[p][j];
        bell[m + 1] = s;
      }
      BigFloat coeff = gam_r[p];
      for (int k = 0; k <= k_max; ++k) {
        if (k > 0) coeff = bell[k] * gam_r[p] * half_pow[k];
        BigComplex term = t * coeff;
        acc.sums[k] += term;
        BigFloat mag = detail::abs1(term);
        if (mag > acc.max_term[k]) acc.max_term[k] = mag;
        if (!(mag < tol * (1 + detail::abs1(acc.sums[k])))) all_small = false;
      }
      // advance ladders at parity p to x + 1
      if (k_max >= 1) {
        BigFloat inv = 1 / xcur_r[p];
        BigFloat powv = inv;
        BigFloat rf = 1;
        for (int r = 0; r <= k_max - 1; ++r) {
          if (r > 0) {
            rf *= r;
            powv *= inv;
          }
          BigFloat step = rf * powv;
          psi[p][r] += (r % 2 == 0) ? step : -step;
        }
      }
      gam_r[p] *= xcur_r[p];
      xcur_r[p] += 1;
    } else {
      BigComplex term = t * gam_c[p];
      acc.sums[0] += term;
      BigFloat mag = detail::abs1(term);
      if (mag > acc.max_term[0]) acc.max_term[0] = mag;
      if (!(mag < tol * (1 + detail::abs1(acc.sums[0])))) all_small = false;
      gam_c[p] = gam_c[p] * xcur_c[p];
      xcur_c[p].re += 1;
    }

    consecutive_small = all_small ? consecutive_small + 1 : 0;
    if (consecutive_small >= 3) break;

    t = t * mz;
    t = t * (sqrt2 / BigFloat(static_cast<double>(n + 1)));
  }
  return acc;
}

}  // namespace

namespace detail_pcf {

// Full-precision family evaluation; returns values at the caller's guard
// precision. Retries internally when the a-posteriori cancellation check
// shows the a-priori precision was insufficient.
std::vector<BigComplex> family_big(int k_max, Complex nu, Complex z,
                                   const SeriesTruncation& tr, double tol) {
  for (int attempt = 0;; ++attempt) {
    FamilyAccum acc = family_sum(k_max, nu, z, tr, tol);

    // prefactor e^{-z^2/4} / Gamma(-nu)
    BigComplex bz(z);
    BigComplex pref = detail::exp(BigComplex(-0.25) * bz * bz);
    if (nu.imag() == 0.0) {
      pref = pref / mp::tgamma(BigFloat(-nu.real()));
    } else {
      pref = pref / detail::gamma_big(BigComplex(-nu.real(), -nu.imag()));
    }

    // a-posteriori loss check: the rounding floor max_term * 10^-digits must
    // sit below the requested tolerance relative to the result scale
    unsigned digits = BigFloat::default_precision();
    bool ok = true;
    double worst_extra = 0.0;
    for (int k = 0; k <= k_max; ++k) {
      double max_log =
          acc.max_term[k] > 0 ? static_cast<double>(log10(acc.max_term[k])) : 0.0;
      double sum_log = static_cast<double>(
          log10(1 + detail::abs1(acc.sums[k])));
      double floor_log = max_log - static_cast<double>(digits);
      double need_log = sum_log + std::log10(std::max(tol, 1e-40)) - 2.0;
      if (floor_log > need_log) {
        ok = false;
        worst_extra = std::max(worst_extra, floor_log - need_log);
      }
    }
    if (ok || attempt >= 2) {
      std::vector<BigComplex> out;
      out.reserve(k_max + 1);
      for (int k = 0; k <= k_max; ++k) out.push_back(pref * acc.sums[k]);
      return out;
    }
    BigFloat::default_precision(digits + static_cast<unsigned>(worst_extra) + 12);
  }
}

}  // namespace detail_pcf

Complex pcf_series(Complex nu, Complex z, const SeriesTruncation& trunc) {
  require_finite(nu, "pcf_series");
  require_finite(z, "pcf_series");
  if (!(nu.real() < 0.0))
    throw std::domain_error("pcf_series: requires Re(nu) < 0");
  PrecisionGuard guard(series_digits(z, trunc.abs_tol, 0));
  return detail_pcf::family_big(0, nu, z, trunc, trunc.abs_tol)[0].to_complex();
}

Complex pcf_modified(const ModifiedPcfSpec& spec) {
  require_finite(spec.nu, "pcf_modified");
  require_finite(spec.z, "pcf_modified");
  if (spec.deriv_order < 0)
    throw std::domain_error("pcf_modified: requires k >= 0");
  if (!(spec.nu.real() < 0.0))
    throw std::domain_error("pcf_modified: requires Re(nu) < 0");
  PrecisionGuard guard(series_digits(spec.z, spec.trunc.abs_tol, 2 * spec.deriv_order));
  return detail_pcf::family_big(spec.deriv_order, spec.nu, spec.z, spec.trunc,
                                spec.trunc.abs_tol)[spec.deriv_order]
      .to_complex();
}

std::vector<Complex> pcf_modified_family(int k_max, Complex nu, Complex z,
                                         const SeriesTruncation& trunc) {
  require_finite(nu, "pcf_modified_family");
  require_finite(z, "pcf_modified_family");
  if (k_max < 0) throw std::domain_error("pcf_modified_family: requires k_max >= 0");
  if (!(nu.real() < 0.0))
    throw std::domain_error("pcf_modified_family: requires Re(nu) < 0");
  PrecisionGuard guard(series_digits(z, trunc.abs_tol, 2 * k_max));
  auto big = detail_pcf::family_big(k_max, nu, z, trunc, trunc.abs_tol);
  std::vector<Complex> out(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) out[i] = big[i].to_complex();
  return out;
}

Complex gamma_index_deriv(int k, int n, Complex nu) {
  require_finite(nu, "gamma_index_deriv");
  if (k < 0 || n < 0)
    throw std::domain_error("gamma_index_deriv: requires k >= 0, n >= 0");
  Complex x = 0.5 * (Complex(static_cast<double>(n), 0.0) - nu);
  if (nu.imag() == 0.0) {
    double xr = x.real();
    if (xr <= 0.0)
      throw std::domain_error("gamma_index_deriv: gamma pole or left half-line");
    double g = gamma_positive(xr);
    if (k == 0) return Complex(g, 0.0);
    // (-1/2)^k Gamma(x) sum_j B_{k,j}(psi^{(0)}, ..., psi^{(k-1)})
    std::vector<Complex> args(k);
    for (int r = 0; r < k; ++r) args[r] = Complex(polygamma(r, xr), 0.0);
    Complex b = bell_complete(k, args);
    return std::pow(-0.5, k) * g * b;
  }
  if (x.real() <= 0.0)
    throw std::domain_error("gamma_index_deriv: requires Re((n-nu)/2) > 0");
  if (k > 0)
    throw std::domain_error(
        "gamma_index_deriv: derivative orders require a real index");
  PrecisionGuard guard(25);
  return detail::gamma_big(BigComplex(x)).to_complex();
}

Complex pcf_via_integral(Complex nu, Complex z) {
  require_finite(nu, "pcf_via_integral");
  require_finite(z, "pcf_via_integral");
  if (!(nu.real() < 0.0))
    throw std::domain_error("pcf_via_integral: requires Re(nu) < 0");
  const double cutoff = 12.0 + 2.5 * std::abs(z);
  auto f = [&](double x) -> Complex {
    return std::exp(-x * z - 0.5 * x * x) * std::pow(Complex(x, 0.0), -nu - 1.0);
  };
  double err = 0.0;
  Complex integral = detail::tanh_sinh(f, 0.0, cutoff, 5e-13, &err);
  Complex pref;
  {
    PrecisionGuard guard(25);
    BigComplex bz(z);
    pref = (detail::exp(BigComplex(-0.25) * bz * bz) /
            detail::gamma_big(BigComplex(-nu.real(), -nu.imag())))
               .to_complex();
  }
  return pref * integral;
}

}  // namespace oscint::specfun
