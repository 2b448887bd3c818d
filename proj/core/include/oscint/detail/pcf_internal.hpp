#pragma once

// Internal full-precision access to the Weber-series family evaluator.
// Callers open a PrecisionGuard and receive values carrying that precision;
// downstream assemblies with large term cancellation stay in BigComplex.

#include <vector>

#include "oscint/detail/mp.hpp"
#include "oscint/types.hpp"

namespace oscint::specfun::detail_pcf {

std::vector<oscint::detail::BigComplex> family_big(int k_max, Complex nu, Complex z,
                                                   const SeriesTruncation& tr,
                                                   double tol);

}  // namespace oscint::specfun::detail_pcf
