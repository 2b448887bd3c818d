#include <cmath>
#include <map>

#include "oscint/closedform.hpp"
#include "oscint/specfun.hpp"

namespace oscint::closedform {

namespace {
constexpr double kPi = 3.14159265358979323846;

Complex r_at(double tau) {
  thread_local std::map<double, Complex> cache;
  auto it = cache.find(tau);
  if (it != cache.end()) return it->second;
  Complex v = specfun::r_function(tau);
  if (cache.size() > 64) cache.clear();
  cache.emplace(tau, v);
  return v;
}
}  // namespace

double r_ref_real() { return -kPi / 8.0; }

double j1_closed(double tau, double tau_ref) {
  require_finite(tau, "j1_closed");
  require_finite(tau_ref, "j1_closed");
  // J1 normalized to J1(tau_ref) = 0; the nested sine integral's lower limit
  // diverges logarithmically, so the reference point is part of the contract.
  return (specfun::r_function(tau) - r_at(tau_ref)).imag();
}

double i1_closed_fresnel(double tau) {
  require_finite(tau, "i1_closed_fresnel");
  auto f = specfun::fresnel(std::sqrt(2.0 / kPi) * tau);
  double a = 0.5 + f.c;
  double b = 0.5 + f.s;
  return 0.25 * kPi * (a * a + b * b);
}

}  // namespace oscint::closedform
