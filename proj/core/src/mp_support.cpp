#include "oscint/detail/mp.hpp"

#include <cmath>

namespace oscint::detail {

std::recursive_mutex& mp_mutex() {
  static std::recursive_mutex m;
  return m;
}

BigFloat big_pi() {
  BigFloat r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

BigFloat big_euler() {
  BigFloat r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

BigFloat big_log2() {
  BigFloat r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

BigFloat big_zeta(unsigned n) {
  BigFloat r;
  mpfr_zeta_ui(r.backend().data(), n, MPFR_RNDN);
  return r;
}

namespace {
struct BernoulliCache {
  unsigned digits = 0;
  std::vector<BigFloat> b;
};
thread_local BernoulliCache g_bernoulli;
}  // namespace

const std::vector<BigFloat>& bernoulli_b2n(int count) {
  BernoulliCache& c = g_bernoulli;
  unsigned digits = BigFloat::default_precision();
  if (c.digits != digits || static_cast<int>(c.b.size()) < count) {
    c.digits = digits;
    c.b.clear();
    c.b.emplace_back(1);  // B_0
    // B_{2n} = (-1)^{n+1} * 2 * (2n)! / (2 pi)^{2n} * zeta(2n)
    BigFloat four_pi2 = 4 * big_pi() * big_pi();
    BigFloat g = 2 / four_pi2;  // (2n)! / (2 pi)^{2n} at n = 1
    for (int n = 1; n < count; ++n) {
      BigFloat val = 2 * g * big_zeta(2 * n);
      if (n % 2 == 0) val = -val;
      c.b.push_back(val);
      g *= BigFloat(2 * n + 1) * BigFloat(2 * n + 2) / four_pi2;
    }
  }
  return c.b;
}

BigComplex gamma_big(const BigComplex& w) {
  if (w.re <= 0) throw std::domain_error("gamma_big: requires Re(w) > 0");
  unsigned digits = BigFloat::default_precision();
  // Raise the argument until the Stirling series reaches the target accuracy
  // near its optimal truncation; error there is ~ exp(-2 pi |W|).
  double target = 0.367 * digits + 8.0;
  long m = 0;
  double re_w = static_cast<double>(w.re);
  if (re_w < target) m = static_cast<long>(std::ceil(target - re_w));

  BigComplex W{w.re + m, w.im};
  BigComplex P{BigFloat(1), BigFloat(0)};
  {
    BigComplex t = w;
    for (long i = 0; i < m; ++i) {
      P = P * t;
      t.re += 1;
    }
  }

  // ln Gamma(W) = (W - 1/2) ln W - W + ln(2 pi)/2
  //             + sum_j B_{2j} / (2j (2j-1) W^{2j-1})
  BigComplex lw = log(W);
  BigComplex acc = (W - BigComplex(0.5)) * lw - W;
  acc.re += BigFloat(0.5) * boost::multiprecision::log(2 * big_pi());

  int nmax = static_cast<int>(1.3 * digits) + 24;
  const std::vector<BigFloat>& B = bernoulli_b2n(nmax + 1);
  BigComplex invW = BigComplex(1.0) / W;
  BigComplex invW2 = invW * invW;
  BigComplex p = invW;  // W^{-(2j-1)}
  BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits) - 4);
  BigFloat prev_mag = 0;
  for (int j = 1; j <= nmax; ++j) {
    BigComplex term = (B[j] / BigFloat(2 * j * (2 * j - 1))) * p;
    acc += term;
    BigFloat mag = abs1(term);
    if (mag < eps) break;
    if (j > 2 && prev_mag != 0 && mag > prev_mag) break;  // past optimal truncation
    prev_mag = mag;
    p = p * invW2;
  }
  return exp(acc) / P;
}

std::vector<BigFloat> polygamma_big(int r_max, const BigFloat& x) {
  if (x <= 0) throw std::domain_error("polygamma_big: requires x > 0");
  unsigned digits = BigFloat::default_precision();

  // Closed forms at x = 1 and x = 1/2: the half-integer ladders used by the
  // Weber-series coefficients start here, so these two points carry the
  // highest-precision load.
  if (x == 1 || x == BigFloat(0.5)) {
    std::vector<BigFloat> out(r_max + 1);
    const bool half = (x != 1);
    out[0] = -big_euler();
    if (half) out[0] -= 2 * big_log2();
    BigFloat rfact = 1;
    BigFloat two_pow = 4;  // 2^{r+1} at r = 1
    for (int r = 1; r <= r_max; ++r) {
      rfact *= r;
      BigFloat v = rfact * big_zeta(r + 1);
      if (half) v *= (two_pow - 1);
      if (r % 2 == 0) v = -v;
      out[r] = v;
      two_pow *= 2;
    }
    return out;
  }

  double target = 0.367 * digits + r_max + 8.0;
  long m = 0;
  double xd = static_cast<double>(x);
  if (xd < target) m = static_cast<long>(std::ceil(target - xd));
  BigFloat X = x + m;

  std::vector<BigFloat> out(r_max + 1);
  int nmax = static_cast<int>(1.3 * digits) + 24;
  const std::vector<BigFloat>& B = bernoulli_b2n(nmax + 1);
  BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits) - 4);

  BigFloat invX = 1 / X;
  BigFloat invX2 = invX * invX;
  BigFloat rfact = 1;  // r!
  BigFloat xr = 1;     // X^{-r}
  for (int r = 0; r <= r_max; ++r) {
    if (r > 0) rfact *= r;
    BigFloat s;
    BigFloat p = invX2;  // X^{-2j}
    BigFloat prev_mag = 0;
    if (r == 0) {
      s = boost::multiprecision::log(X) - BigFloat(0.5) * invX;
      for (int j = 1; j <= nmax; ++j) {
        BigFloat term = B[j] / (2 * j) * p;
        s -= term;
        BigFloat mag = abs(term);
        if (mag < eps) break;
        if (j > 2 && prev_mag != 0 && mag > prev_mag) break;
        prev_mag = mag;
        p *= invX2;
      }
    } else {
      // psi^{(r)}(X) = (-1)^{r-1} [ (r-1)!/X^r + r!/(2 X^{r+1})
      //                             + sum_j B_{2j} (2j+r-1)!/((2j)! X^{2j+r}) ]
      s = (rfact / r) * xr + BigFloat(0.5) * rfact * xr * invX;
      BigFloat F = rfact * (r + 1) / 2;  // (2j+r-1)!/(2j)! at j = 1
      for (int j = 1; j <= nmax; ++j) {
        BigFloat term = B[j] * F * p * xr;
        s += term;
        BigFloat mag = abs(term);
        if (mag < eps) break;
        if (j > 2 && prev_mag != 0 && mag > prev_mag) break;
        prev_mag = mag;
        p *= invX2;
        F *= BigFloat(2 * j + r) * BigFloat(2 * j + r + 1) /
             (BigFloat(2 * j + 1) * BigFloat(2 * j + 2));
      }
      if (r % 2 == 0) s = -s;
    }
    out[r] = s;
    xr *= invX;
  }

  // Downward recurrence:
  // psi^{(r)}(x) = psi^{(r)}(x+m) - sum_{i<m} (-1)^r r! (x+i)^{-(r+1)}
  for (long i = 0; i < m; ++i) {
    BigFloat inv = 1 / (x + i);
    BigFloat powv = inv;  // (x+i)^{-(r+1)}
    BigFloat rf = 1;
    for (int r = 0; r <= r_max; ++r) {
      if (r > 0) {
        rf *= r;
        powv *= inv;
      }
      BigFloat corr = rf * powv;
      if (r % 2 == 1) corr = -corr;
      out[r] -= corr;
    }
  }
  return out;
}

}  // namespace oscint::detail
