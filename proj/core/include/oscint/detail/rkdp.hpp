#pragma once

// Adaptive Dormand-Prince 5(4) with the standard quartic continuous
// extension. Samples are delivered through a callback while integrating, so
// long runs keep O(dim) memory.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "oscint/types.hpp"

namespace oscint::detail {

struct Dopri5Stats {
  std::int64_t steps = 0;
  std::int64_t rejected = 0;
};

// f(t, y, dydt); on_sample(sample_index, t_sample, y_at_sample)
template <class RHS, class Sink>
Dopri5Stats dopri5(RHS&& f, int dim, double t0, double t1,
                   std::vector<double> y, double rtol, double atol,
                   std::span<const double> sample_ts, Sink&& on_sample,
                   std::int64_t max_steps = 200000000) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  static const double d1 = -12715105075.0 / 11282082432.0,
                      d3 = 87487479700.0 / 32700410799.0,
                      d4 = -10690763975.0 / 1880347072.0,
                      d5 = 701980252875.0 / 199316789632.0,
                      d6 = -1453857185.0 / 822651844.0,
                      d7 = 69997945.0 / 29380423.0;

  const int n = dim;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n),
      y1(n), rc1(n), rc2(n), rc3(n), rc4(n), rc5(n);

  Dopri5Stats stats;
  double t = t0;
  std::size_t next_sample = 0;
  while (next_sample < sample_ts.size() && sample_ts[next_sample] < t0)
    ++next_sample;  // samples before the start are not reachable

  f(t, y.data(), k1.data());
  // initial step from the scale of the first derivative
  double h;
  {
    double dn = 0, yn = 0;
    for (int i = 0; i < n; ++i) {
      dn = std::max(dn, std::abs(k1[i]));
      yn = std::max(yn, std::abs(y[i]));
    }
    h = std::min(1e-2, 1e-2 * (yn + 1.0) / (dn + 1e-8));
    h = std::max(h, 1e-10);
  }

  // deliver samples exactly at t0
  while (next_sample < sample_ts.size() && sample_ts[next_sample] <= t0) {
    on_sample(next_sample, sample_ts[next_sample], y.data());
    ++next_sample;
  }

  while (t < t1) {
    if (++stats.steps > max_steps)
      throw IntegrationError("dopri5: step budget exhausted", t);
    if (h < 1e-14 * (std::abs(t) + 1.0))
      throw IntegrationError("dopri5: step size underflow", t);
    if (t + h > t1) h = t1 - t;

    for (int i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, yt.data(), k2.data());
    for (int i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, yt.data(), k3.data());
    for (int i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, yt.data(), k4.data());
    for (int i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, yt.data(), k5.data());
    for (int i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                          a65 * k5[i]);
    f(t + h, yt.data(), k6.data());
    for (int i = 0; i < n; ++i)
      y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    f(t + h, y1.data(), k7.data());

    double err = 0;
    for (int i = 0; i < n; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                      e6 * k6[i] + e7 * k7[i]);
      double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / n);

    if (err <= 1.0) {
      // continuous extension over [t, t+h]
      bool need_dense = next_sample < sample_ts.size() &&
                        sample_ts[next_sample] <= t + h;
      if (need_dense) {
        for (int i = 0; i < n; ++i) {
          double ydiff = y1[i] - y[i];
          double bspl = h * k1[i] - ydiff;
          rc1[i] = y[i];
          rc2[i] = ydiff;
          rc3[i] = bspl;
          rc4[i] = ydiff - h * k7[i] - bspl;
          rc5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                        d6 * k6[i] + d7 * k7[i]);
        }
        while (next_sample < sample_ts.size() &&
               sample_ts[next_sample] <= t + h) {
          double th = (sample_ts[next_sample] - t) / h;
          for (int i = 0; i < n; ++i)
            yt[i] = rc1[i] +
                    th * (rc2[i] +
                          (1 - th) * (rc3[i] + th * (rc4[i] + (1 - th) * rc5[i])));
          on_sample(next_sample, sample_ts[next_sample], yt.data());
          ++next_sample;
        }
      }
      t += h;
      y.swap(y1);
      k1.swap(k7);  // FSAL
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
      h *= std::min(5.0, std::max(0.2, fac));
    } else {
      ++stats.rejected;
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
  }
  return stats;
}

}  // namespace oscint::detail
