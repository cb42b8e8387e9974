#pragma once

#include <vector>

#include "hopfion/ode.hpp"
#include "hopfion/types.hpp"

namespace hopfion {

// Normalized transport velocity of the electromagnetic hopfion,
//
//   v = w / D,  D = a^2 + r^2 + t^2 - 2 t z,
//   w = (2x(t-z) - 2ay,  2y(t-z) + 2ax,  r^2 - a^2 - t^2 + 2z(t-z)),
//
// with |w| = D identically, so |v| = 1 everywhere.  Independent of l.
Vec3 velocity_maxwell(const SpaceTimePoint& p, double a);

// Transport velocity j/j0 of the upper Dirac state.  Evaluated through the
// Bessel ratio Q = |s K_{l+1}(ms) / K_{l+2}(ms)|^2, which stays finite when
// the current itself underflows:
//
//   v = (2(x u - A y), 2(y u + A x), rho^2 - A^2 - u^2 + Q) /
//       (rho^2 + A^2 + u^2 + Q)
//
// with A = a gamma (1 - v_boost), u = t - z.  |v| < 1 strictly; Q -> 0 as
// m -> 0 recovers velocity_maxwell.
Vec3 velocity_dirac(const SpaceTimePoint& p, const PacketParams& params);

// Stereographic image (v_x + i v_y)/(1 - v_z) of a unit-sphere direction.
struct Stereographic {
    cplx value;
    bool infinite = false;  // set when v_z = 1 (north pole)
};
Stereographic hopf_map(const Vec3& v);

// Closed form of the stereographic image along either velocity field:
// (x + iy) / (t - z - ia).
cplx upsilon_closed(const SpaceTimePoint& p, double a);

// Point at height z on the level line {upsilon = const} of upsilon_closed
// at fixed t: x = (t-z) Re u + a Im u, y = (t-z) Im u - a Re u.
Vec3 hopf_level_line(cplx upsilon, double z, double t, double a);

enum class TraceSource { CurrentJPlus, VelocityDirac, VelocityMaxwell };

// Integrate the unit tangent of the selected field from seed at fixed time.
// All sources are normalized to unit speed, so lambda is arc length and the
// geometry matches the raw streamline.  Maxwell traces ignore l, m, v_boost.
StreamlineTrace trace_line(TraceSource source, const Vec3& seed, double lambda_max,
                           const PacketParams& params, double t = 0,
                           const OdeControl& ctl = {});

// How well a trace returns to its seed: after the trace first leaves a ball
// of radius 0.25 * max seed distance, the minimum point-to-segment distance
// back to the seed, normalized by the trace diameter.  Throws DegenerateError
// if the trace never departs.
double closure_metric(const StreamlineTrace& trace);

// One period of a closed trace: truncated at the first near-return to the
// seed (after departure), suitable for linking_number.  Throws
// DegenerateError if no return is found.
std::vector<Vec3> extract_closed_loop(const StreamlineTrace& trace);

// Signed Gauss linking integral of two closed polylines (last vertex joins
// the first), midpoint rule per segment pair with recursive refinement of
// close pairs.  Throws DomainError if the curves approach closer than
// min_separation anywhere.
double linking_number(const std::vector<Vec3>& c1, const std::vector<Vec3>& c2,
                      double min_separation = 1e-6);

}  // namespace hopfion
