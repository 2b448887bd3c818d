#include <cmath>

#include "oscint/detail/mp.hpp"
#include "oscint/detail/pcf_internal.hpp"
#include "oscint/specfun.hpp"

namespace oscint::specfun {

using detail::BigComplex;
using detail::BigFloat;
using detail::PrecisionGuard;

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

// Maclaurin series; cancellation-free for small |w|.
Complex erf_maclaurin(Complex w) {
  Complex w2 = w * w;
  Complex term = w;
  Complex sum = w;
  for (int n = 1; n < 60; ++n) {
    term *= -w2 / static_cast<double>(n);
    Complex add = term / (2.0 * n + 1.0);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 / kSqrtPi * sum;
}

// Weber-series identity: erf(w) = 1 - sqrt(2/pi) e^{-w^2/2} D_{-1}(sqrt(2) w).
Complex erf_from_pcf(Complex w) {
  double zn = 2.0 * std::norm(w);  // |sqrt(2) w|^2
  unsigned digits = static_cast<unsigned>(26.0 + 0.21715 * zn);
  PrecisionGuard guard(digits);
  Complex arg = std::sqrt(2.0) * w;
  BigComplex d = detail_pcf::family_big(0, Complex(-1.0, 0.0), arg, {}, 1e-18)[0];
  BigComplex bw(w);
  BigComplex e = detail::exp(BigComplex(-0.5) * bw * bw);
  BigFloat c = sqrt(2 / detail::big_pi());
  BigComplex r = BigComplex(1.0) - c * (e * d);
  return r.to_complex();
}

// Laplace continued fraction: sqrt(pi) e^{z^2} erfc(z) = 1/(z+ (1/2)/(z+ (1)/(z+ ...)))
// Reliable for Re(z) > 0 away from the imaginary axis.
Complex erf_cf(Complex z) {
  const double tiny = 1e-290;
  Complex f(z), C(z), D(0.0, 0.0);
  for (int n = 1; n < 400; ++n) {
    double a = 0.5 * n;
    D = z + a * D;
    if (std::abs(D) < tiny) D = tiny;
    D = 1.0 / D;
    C = z + a / C;
    if (std::abs(C) < tiny) C = tiny;
    Complex delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) {
      Complex erfc = std::exp(-z * z) / (kSqrtPi * f);
      return 1.0 - erfc;
    }
  }
  throw ConvergenceError("erf_complex: continued fraction stalled", f, 400, 0.0);
}

}  // namespace

Complex erf_complex(Complex z) {
  require_finite(z, "erf_complex");
  double sign = 1.0;
  Complex w = z;
  if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) {
    w = -w;
    sign = -1.0;
  }
  Complex w2 = w * w;
  if (w2.real() < -700.0)
    throw std::range_error("erf_complex: |exp(-z^2)| overflow (Re z^2 < -700)");

  double aw = std::abs(w);
  Complex r;
  if (aw <= 0.5) {
    r = erf_maclaurin(w);
  } else if (aw <= 6.0 || std::abs(std::arg(w)) > 3.0 * 3.14159265358979323846 / 8.0) {
    r = erf_from_pcf(w);
  } else {
    r = erf_cf(w);
  }
  return sign * r;
}

}  // namespace oscint::specfun
