#pragma once

#include <vector>

#include "hopfion/types.hpp"

namespace hopfion {

// Momentum-space probability density of a rest-frame packet,
//
//   rho(p) = pi N^2 / m^{2q+2} * (p_x^2 + p_y^2)^q * exp(-2 a E),
//
// with q = l for Psi+-, q = l+1 for Phi+-, E = sqrt(m^2 + p^2).  Integrates
// to 1 over R^3 with N from normalization_constant.
double momentum_density(const Vec3& pvec, BispinorKind kind, const PacketParams& params);

// Total momentum-space probability: the radial integral with the closed
// angular factor 2 pi 2^{2q+1} (q!)^2 / (2q+1)!.  Equals 1 when N is right;
// serves as the momentum-side normalization cross-check.
double momentum_total(BispinorKind kind, const PacketParams& params);

// <p^2> of the momentum density (1D radial ratio; rest frame only).
double momentum_p2(BispinorKind kind, const PacketParams& params);

// <p^2/E^2>, the squared spreading speed of the packet; in (0, 1).
double momentum_b(BispinorKind kind, const PacketParams& params);

// <p_z>; vanishes by parity, evaluated by quadrature as a consistency probe.
double momentum_pz(BispinorKind kind, const PacketParams& params);

// <r^2>(t) = integral of r^2 j^0 over the fixed-time slice (rest frame).
double spatial_moment(BispinorKind kind, const PacketParams& params, double t = 0);

// Least-squares fit of <r^2>(t) against {1, t^2}:
//   <r^2>(t) = r2_0 + b t^2,
// where b reproduces <p^2/E^2>.  Default samples: t = {0, a/2, a, 3a/2, 2a}.
struct SpreadingFit {
    double r2_0 = 0;           // fitted <r^2>(0)
    double b = 0;              // fitted quadratic coefficient
    double residual = 0;       // rms misfit / mean <r^2>
    std::vector<double> t_samples;
    std::vector<double> r2_values;
};
SpreadingFit spreading_fit(BispinorKind kind, const PacketParams& params,
                           std::vector<double> t_samples = {});

// Position/momentum widths of the rest-frame packet at t = 0.  First moments
// of both densities vanish by symmetry; <p_z> is measured and subtracted.
struct UncertaintyResult {
    double r2_mean = 0;
    double p2_mean = 0;
    double pz_mean = 0;
    double dr = 0;       // sqrt(<r^2>)
    double dp = 0;       // sqrt(<p^2> - <p_z>^2)
    double product = 0;  // dr * dp, bounded below by 3/2
};
UncertaintyResult uncertainty_product(BispinorKind kind, const PacketParams& params);

// Charge density sampled on a uniform (x, z) grid, either on the y = 0 plane
// or with y integrated out (the marginal; its grid mass approaches 1 as the
// window grows).  Works for boosted packets; moments quantify the
// Lorentz contraction along z.
enum class ProfileMode { Slice, Integrated };

struct ChargeProfile {
    std::vector<double> x, z;            // cell centers
    std::vector<std::vector<double>> density;  // density[ix][iz]
    double mass = 0;                     // sum * dx * dz
    double x_second_moment = 0;          // <x^2> over the grid
    double z_second_moment = 0;          // <z^2> over the grid
};
ChargeProfile charge_profile(BispinorKind kind, const PacketParams& params,
                             double half_width_x, double half_width_z, int nx, int nz,
                             ProfileMode mode = ProfileMode::Slice, double t = 0);

}  // namespace hopfion
