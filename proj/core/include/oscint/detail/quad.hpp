#pragma once

// Quadrature building blocks: tanh-sinh for endpoint-singular integrands and
// an adaptive Gauss-Kronrod 7/15 rule with oscillation-aware panelization.

#include <cmath>
#include <functional>

#include "oscint/types.hpp"

namespace oscint::detail {

// tanh-sinh quadrature of f over [a, b]. Handles integrable endpoint
// singularities. err_est receives the last level-to-level difference.
template <class F>
Complex tanh_sinh(F&& f, double a, double b, double tol, double* err_est,
                  int max_level = 12) {
  const double half = 0.5 * (b - a);
  const double pi_half = 1.5707963267948966;

  auto node = [&](double u, double& xa_off, double& xb_off, double& w) {
    // offsets from the endpoints computed without cancellation
    double t = pi_half * std::sinh(u);
    double e2t = std::exp(-2.0 * std::abs(t));
    double off = (b - a) * e2t / (1.0 + e2t);  // distance to the nearer endpoint
    w = half * pi_half * std::cosh(u) * 4.0 * e2t / ((1.0 + e2t) * (1.0 + e2t));
    if (t >= 0) {
      xa_off = (b - a) - off;  // from a
      xb_off = off;            // from b
    } else {
      xa_off = off;
      xb_off = (b - a) - off;
    }
  };

  auto eval_at = [&](double u) -> Complex {
    double xa, xb, w;
    node(u, xa, xb, w);
    if (xa <= 0.0 || xb <= 0.0) return Complex(0.0, 0.0);
    return w * f(a + xa);
  };

  const double umax = 6.56;  // weight underflows past here
  double h = 1.0;
  Complex total = pi_half * half * f(a + 0.5 * (b - a));  // u = 0 node, w = pi/2*half
  for (double u = h; u <= umax; u += h) {
    total += eval_at(u) + eval_at(-u);
  }
  total *= h;

  Complex prev = total;
  double diff = std::abs(total);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    Complex mid(0.0, 0.0);
    for (double u = h; u <= umax; u += 2.0 * h) {
      mid += eval_at(u) + eval_at(-u);
    }
    total = 0.5 * prev + h * mid;
    diff = std::abs(total - prev);
    prev = total;
    if (level >= 3 && diff <= tol * std::max(1.0, std::abs(total))) {
      if (err_est) *err_est = diff;
      return total;
    }
  }
  if (err_est) *err_est = diff;
  throw QuadratureError("tanh_sinh: tolerance not reached", diff);
}

// Gauss-Kronrod 7/15 on [a, b]; kronrod result, err = |kronrod - gauss|.
template <class F>
Complex gk15(F&& f, double a, double b, double* err) {
  static const double xk[8] = {
      0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
      0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
      0.20778495500789846760, 0.0};
  static const double wk[8] = {
      0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
      0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
      0.20443294007529889241, 0.20948214108472782801};
  static const double wg[4] = {
      0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
      0.41795918367346938776};

  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  Complex fc = f(c);
  Complex resk = wk[7] * fc;
  Complex resg = wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    Complex fa = f(c - hw * xk[i]);
    Complex fb = f(c + hw * xk[i]);
    resk += wk[i] * (fa + fb);
    if (i % 2 == 1) resg += wg[i / 2] * (fa + fb);
  }
  resk *= hw;
  resg *= hw;
  if (err) *err = std::abs(resk - resg);
  return resk;
}

// Integrates f over [a, b] with panels sized to resolve e^{+- i tau^2}
// oscillation (panel width <= pi / (4|tau| + 1)), bisecting panels whose
// embedded error estimate exceeds the share of the tolerance.
template <class F>
Complex oscillatory_integrate(F&& f, double a, double b, double tol,
                              double* err_out = nullptr) {
  if (a == b) return Complex(0.0, 0.0);
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  Complex total(0.0, 0.0);
  double err_total = 0.0;
  double t = a;
  while (t < b) {
    double width = 3.14159265358979 / (4.0 * std::max(std::abs(t), std::abs(std::min(t + 1.0, b))) + 1.0);
    width = std::min(width, 0.5);
    double t2 = std::min(b, t + width);
    // adaptive bisection inside the panel
    struct Seg {
      double a, b;
      int depth;
    };
    std::vector<Seg> stack{{t, t2, 0}};
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      double e;
      Complex v = gk15(f, s.a, s.b, &e);
      double local_tol = tol * (s.b - s.a) / (b - a);
      if (e <= std::max(local_tol, 1e-300) || s.depth >= 24) {
        total += v;
        err_total += e;
      } else {
        double m = 0.5 * (s.a + s.b);
        stack.push_back({s.a, m, s.depth + 1});
        stack.push_back({m, s.b, s.depth + 1});
      }
    }
    t = t2;
  }
  if (err_out) *err_out = err_total;
  return sign * total;
}

}  // namespace oscint::detail
