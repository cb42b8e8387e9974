#pragma once

#include "hopfion/types.hpp"

namespace hopfion {

// Macdonald function K_nu(z) for integer nu >= 0 and Re z > 0.
//
// K_0 and K_1 are computed by a region-split scheme: the ascending power
// series for |z| < 2 and a Steed-style continued fraction for |z| >= 2.
// In the seam band 1.8 <= |z| <= 2.2 both methods are evaluated and must
// agree; disagreement raises AccuracyError instead of returning a value.
// Higher orders follow from the upward recurrence
//     K_{nu+1}(z) = K_{nu-1}(z) + (2 nu / z) K_nu(z),
// which is stable because K grows with order.
cplx bessel_k(int nu, cplx z);

// e^z K_nu(z); same contract, safe from underflow for large Re z.
cplx bessel_k_scaled(int nu, cplx z);

}  // namespace hopfion
