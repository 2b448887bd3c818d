#include <cmath>

#include "oscint/detail/mp.hpp"
#include "oscint/specfun.hpp"

namespace oscint::specfun {

using detail::BigComplex;
using detail::BigFloat;
using detail::PrecisionGuard;

Complex hyp2f2_11(double b1, double b2, Complex w, const SeriesTruncation& trunc) {
  require_finite(w, "hyp2f2_11");
  require_finite(b1, "hyp2f2_11");
  require_finite(b2, "hyp2f2_11");
  for (double b : {b1, b2})
    if (b <= 0.0 && b == std::floor(b))
      throw std::domain_error("hyp2f2_11: lower parameter at a pole");

  // term growth peaks near exp(|w|)
  double aw = std::abs(w);
  unsigned digits = static_cast<unsigned>(
      14.0 - std::log10(std::clamp(trunc.abs_tol, 1e-40, 1e-6)) + 0.4343 * aw);
  PrecisionGuard guard(digits);

  BigComplex bw(w);
  BigComplex term(1.0);
  BigComplex sum(1.0);
  int consecutive_small = 0;
  for (std::int64_t n = 0;; ++n) {
    if (n > trunc.max_terms)
      throw ConvergenceError("hyp2f2_11: max_terms exceeded", sum.to_complex(), n,
                             static_cast<double>(detail::abs1(term)));
    // t_n = n! w^n / ((b1)_n (b2)_n); ratio (n+1) w / ((b1+n)(b2+n))
    term = term * bw;
    term = term * (BigFloat(n + 1.0) / (BigFloat(b1 + n) * BigFloat(b2 + n)));
    sum += term;
    if (detail::abs1(term) <
        trunc.abs_tol * (1 + detail::abs1(sum)))
      ++consecutive_small;
    else
      consecutive_small = 0;
    if (consecutive_small >= 3) break;
  }
  return sum.to_complex();
}

Complex r_function(double tau) {
  require_finite(tau, "r_function");
  // R(tau) = (pi/4) erf(mu0 tau / sqrt(2)) + (tau^2/2) 2F2(3/2, 2, i tau^2)
  const double inv_sqrt2 = 0.70710678118654752440;
  Complex erf_part = erf_complex(kMu0 * (tau * inv_sqrt2));
  Complex f = hyp2f2_11(1.5, 2.0, Complex(0.0, tau * tau));
  return 0.25 * 3.14159265358979323846 * erf_part + 0.5 * tau * tau * f;
}

}  // namespace oscint::specfun
