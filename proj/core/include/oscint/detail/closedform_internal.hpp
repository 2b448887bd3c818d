#pragma once

// Extended-precision building blocks shared by the I_k assemblies. The sums
// over n in I_k cancel by roughly 8^k k!, so coefficients and Weber values
// stay in BigComplex until the final conversion.

#include <span>
#include <vector>

#include "oscint/detail/mp.hpp"

namespace oscint::closedform::detail_cf {

using oscint::detail::BigComplex;
using oscint::detail::BigFloat;

// phi^{(r)}(0) for r = 1..r_max (index 0 unused).
std::vector<BigComplex> phi0_big(int r_max);

// Complete Bell values B_0..B_n over the sequence x_1..x_n.
std::vector<BigComplex> complete_bell_ladder(std::span<const BigComplex> x);

// P_{n,m}(0) built from precomputed Bell values of the phi sequence.
BigComplex p_poly0_big(int n, int m, std::span<const BigComplex> bell);

// Working digits for a ray evaluation at |z|^2 = 2 tau^2 with k orders.
unsigned ray_digits(double tau, int k_orders);

}  // namespace oscint::closedform::detail_cf
