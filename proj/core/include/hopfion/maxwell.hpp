#pragma once

#include <array>

#include "hopfion/types.hpp"

namespace hopfion {

// Riemann-Silberstein vector F = (E + iB)/sqrt(2) of the hopfion family:
//
//   F = (x - iy)^l / sigma^{l+3} *
//       (tau^2 - (x-iy)^2,  -i (tau^2 + (x-iy)^2),  2 (x-iy) tau)
//
// with tau = t - z + ia and sigma = x^2 + y^2 + z^2 + (a - it)^2.  l = 0 is
// the classic Hopf-linked electromagnetic knot; higher l adds phase winding
// about the z axis.  Null everywhere: F.F = 0.
std::array<cplx, 3> rs_vector(const SpaceTimePoint& p, int l, double a);

// Real field data unpacked from F: E = sqrt(2) Re F, B = sqrt(2) Im F,
// energy density u = |F|^2, Poynting vector P = Im(conj(F) x F), and the
// normalized transport velocity v = P/u.
struct DerivedEM {
    Vec3 E, B;
    double u = 0;
    Vec3 P;
    Vec3 v;
};
DerivedEM derived_em(const std::array<cplx, 3>& F);

// Max of |i dF/dt - curl F| / scale and |div F| / scale over the field at p,
// derivatives by Richardson extrapolation; scale = local |F| gradient scale.
double maxwell_residual(const SpaceTimePoint& p, int l, double a);

// |F.F| / |F|^2; exactly 0 in exact arithmetic.
double null_violation(const SpaceTimePoint& p, int l, double a);

}  // namespace hopfion
