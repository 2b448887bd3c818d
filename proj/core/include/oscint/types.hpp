#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oscint {

using Complex = std::complex<double>;

// mu0 = sqrt(2) e^{-i pi/4} = 1 - i and its conjugate. The level-crossing
// evaluations all live on the rays z = -i*mu0*tau and z = i*conj(mu0)*tau.
inline constexpr Complex kMu0{1.0, -1.0};
inline constexpr Complex kMu0Bar{1.0, 1.0};

// Argument of the first Weber-function factor, -i*mu0*tau = -(1+i)*tau.
inline Complex ray_arg(double tau) { return Complex(-tau, -tau); }

// Stopping control for the absolutely convergent series evaluators.
// Summation stops once |term| < abs_tol * (1 + |partial sum|) holds for
// three consecutive terms; exceeding max_terms raises ConvergenceError.
struct SeriesTruncation {
  double abs_tol = 1e-14;
  std::int64_t max_terms = 1000000;
};

// One modified parabolic-cylinder-function evaluation D^(k)_nu(z).
// Requires Re(nu) < 0; k = 0 is the ordinary Weber function D_nu(z).
struct ModifiedPcfSpec {
  int deriv_order = 0;
  Complex nu{-1.0, 0.0};
  Complex z{0.0, 0.0};
  SeriesTruncation trunc{};
};

struct ConvergenceError : std::runtime_error {
  Complex partial_sum;
  std::int64_t terms;
  double last_term_mag;
  ConvergenceError(const std::string& what, Complex partial, std::int64_t n, double last)
      : std::runtime_error(what), partial_sum(partial), terms(n), last_term_mag(last) {}
};

struct QuadratureError : std::runtime_error {
  double achieved;
  QuadratureError(const std::string& what, double est)
      : std::runtime_error(what), achieved(est) {}
};

struct IntegrationError : std::runtime_error {
  double location;
  IntegrationError(const std::string& what, double where)
      : std::runtime_error(what), location(where) {}
};

// Raised when two internal routes that must agree do not (imaginary residue
// on a real-valued result, probability outside [0,1] slack, and so on).
struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CancellationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": non-finite argument");
}

inline void require_finite(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error(std::string(what) + ": non-finite argument");
}

}  // namespace oscint
