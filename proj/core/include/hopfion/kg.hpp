#pragma once

#include "hopfion/types.hpp"

namespace hopfion {

// Complex radius s with s^2 = r^2 - t^2 + a^2 + 2 i a gamma (t - v z).
// Principal branch; Re s > 0 on the whole operating domain. The radicand can
// reach the closed negative real axis only at t = v z with r^2 + a^2 <= t^2,
// which is rejected explicitly rather than given a branch meaning.
cplx complex_radius(const SpaceTimePoint& p, const PacketParams& params);

// f_l = (x+iy)^l m K_{l+1}(m s) / s^{l+1}; the l = 0 case is the generating
// packet f_KG. Boosts enter only through s.
cplx scalar_field(const SpaceTimePoint& p, const PacketParams& params);

// Massless counterpart g_l = (x+iy)^l / s^{2l+2}: the solution of the
// d'Alembert equation reached from f_l by the m -> 0 limit after stripping
// the 2^l l! / m^l normalization.
cplx scalar_field_massless(const SpaceTimePoint& p, double a, int l);

// Analytic four-gradient of f_l, order (d_t, d_x, d_y, d_z), via the chain
// rule on s and d/ds [K_nu(m s)/s^nu] = -m K_{nu+1}(m s)/s^nu.
struct ScalarGradient {
    cplx dt, dx, dy, dz;
};
ScalarGradient scalar_gradient(const SpaceTimePoint& p, const PacketParams& params);

// |(d_t^2 - laplacian + m^2) f_l| relative to the magnitudes of the four
// terms, second derivatives by Richardson extrapolation on the analytic
// gradient components. Term-relative scoring keeps the measure meaningful at
// the axis zeros of f_l for l >= 1.
double kg_residual(const SpaceTimePoint& p, const PacketParams& params);

// d'Alembert residual of g_l, normalized by the magnitude of the terms.
double kg_residual_massless(const SpaceTimePoint& p, double a, int l);

// The defining momentum integral of the packet, reduced to one dimension:
// f_KG = (1/r) int_0^inf dp (p/E) sin(p r) e^{-(a+it)E}, E = sqrt(m^2+p^2),
// with the r -> 0 limit taken analytically. Rest frame only. This is the
// independent oracle for scalar_field at l = 0.
cplx momentum_oracle(const SpaceTimePoint& p, const PacketParams& params);

}  // namespace hopfion
