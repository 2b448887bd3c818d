#pragma once

// Extended-precision support built on boost::multiprecision's MPFR backend.
// The oscillatory-ray series in this library cancel like exp(|z|^2/2), so the
// working precision is chosen per evaluation from |z| and the target
// tolerance rather than fixed globally.

#include <complex>
#include <mutex>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "oscint/types.hpp"

namespace oscint::detail {

using BigFloat = boost::multiprecision::mpfr_float;

std::recursive_mutex& mp_mutex();

// Scoped override of the process default mpfr precision (decimal digits).
// Boost 1.74 keeps one global default, so the guard also serializes
// extended-precision sections; nesting from the same thread is fine.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : lock_(mp_mutex()) {
    saved_ = BigFloat::default_precision();
    BigFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

struct BigComplex {
  BigFloat re, im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(double r, double i = 0.0) : re(r), im(i) {}
  explicit BigComplex(const Complex& z) : re(z.real()), im(z.imag()) {}

  Complex to_complex() const {
    return Complex(static_cast<double>(re), static_cast<double>(im));
  }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigFloat& s, const BigComplex& a) {
  return {s * a.re, s * a.im};
}
inline BigComplex operator*(const BigComplex& a, const BigFloat& s) { return s * a; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
inline BigComplex& operator+=(BigComplex& a, const BigComplex& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}

inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
inline BigFloat norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
inline BigFloat abs(const BigComplex& a) { return sqrt(norm(a)); }
// Cheap upper bound on |a|, used in truncation tests.
inline BigFloat abs1(const BigComplex& a) { return abs(a.re) + abs(a.im); }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = norm(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline BigComplex operator/(const BigComplex& a, const BigFloat& s) {
  return {a.re / s, a.im / s};
}

inline BigComplex exp(const BigComplex& a) {
  BigFloat m = boost::multiprecision::exp(a.re);
  BigFloat c = boost::multiprecision::cos(a.im);
  BigFloat s = boost::multiprecision::sin(a.im);
  return {m * c, m * s};
}

inline BigComplex log(const BigComplex& a) {
  return {BigFloat(0.5) * boost::multiprecision::log(norm(a)),
          boost::multiprecision::atan2(a.im, a.re)};
}

BigFloat big_pi();
BigFloat big_euler();
BigFloat big_log2();
BigFloat big_zeta(unsigned n);  // zeta(n), n >= 2

// Even Bernoulli numbers B_0, B_2, ..., B_{2(count-1)} at the current
// precision, computed through zeta(2n).
const std::vector<BigFloat>& bernoulli_b2n(int count);

// Gamma(w) for Re(w) > 0 via upward recurrence plus the Stirling series.
BigComplex gamma_big(const BigComplex& w);

// psi^{(r)}(x) for real x > 0, r = 0..r_max, at the current precision.
std::vector<BigFloat> polygamma_big(int r_max, const BigFloat& x);

}  // namespace oscint::detail
