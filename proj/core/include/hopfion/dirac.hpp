#pragma once

#include <array>

#include "hopfion/types.hpp"

namespace hopfion {

using Mat4 = std::array<std::array<cplx, 4>, 4>;

// Weyl (chiral) representation: gamma0 has off-diagonal identity blocks,
// gamma^i carries -sigma_i in the upper right and +sigma_i in the lower left.
struct GammaAlgebra {
    Mat4 gamma[4];   // gamma^0 .. gamma^3
    Mat4 gamma5;     // i gamma^0 gamma^1 gamma^2 gamma^3
    Mat4 sigma_z4;   // Sigma_z = diag(1, -1, 1, -1)
};
const GammaAlgebra& gamma_algebra();

Bispinor mat_vec(const Mat4& m, const Bispinor& v);

// Normalization constant of Eq.-(13) shape:
//   N^-2 = 2 m pi^2 l_eff! K_{l_eff+2}(2 a m) / (a m)^{l_eff+1},
// with l_eff = l for Psi+- and l+1 for Phi+-. Rest frame.
struct NormalizationConstant {
    double N;
    int l_effective;
};
NormalizationConstant normalization_constant(BispinorKind kind, const PacketParams& params);

// Norm of the rest-normalized state after the boost substitution s -> s_v:
// the construction scales Psi+- by the Doppler factor gamma(1 -+ v) under a
// z-boost, and Phi+- by a kind-specific factor computed numerically. The
// normalized flag of bispinor() divides this back out.
double boost_norm_factor(BispinorKind kind, const PacketParams& params);

// The four bispinor solutions built from the scalar packet: Psi+- from f_l
// via first derivatives (regularized closed forms on the x+iy = 0 axis),
// Phi+- from f_{l+1}. If normalized, the Eq.-(13) constant (and the boost
// factor at v != 0) is applied.
Bispinor bispinor(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params,
                  bool normalized = false);

// Probability current j^mu = Psibar gamma^mu Psi of the normalized state.
// Closed form for Psi+- (regularized), bilinear for Phi+-; the bilinear path
// is exposed separately as the mutual oracle.
FourCurrent four_current(BispinorKind kind, const SpaceTimePoint& p,
                         const PacketParams& params);
FourCurrent four_current_bilinear(BispinorKind kind, const SpaceTimePoint& p,
                                  const PacketParams& params);

// Same current without the N^2 normalization; conservation and causality are
// scale-free, so residual suites use this cheaper path.
FourCurrent four_current_raw(BispinorKind kind, const SpaceTimePoint& p,
                             const PacketParams& params);

// max relative residual of the two Weyl-pair equations
//   i sigma^mu d_mu (upper) = m (lower),  i sigmatilde^mu d_mu (lower) = m (upper),
// derivatives by Richardson extrapolation on bispinor components.
double dirac_residual(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params);

// |d_t j0 + div j| normalized by the local current scale.
double current_conservation_residual(BispinorKind kind, const SpaceTimePoint& p,
                                     const PacketParams& params);

// Local eigenvalue of M_z = -i (x d_y - y d_x) + Sigma_z / 2: the ratio
// (M_z Psi)_k / Psi_k for the largest component k. Throws DegenerateError
// when every component is below threshold.
cplx mz_check(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params);
cplx mz_check_rotated(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params);

// 180-degree rotation about x: Psi'(p) = -i Sigma_x Psi(x, -y, -z, t).
Bispinor rotate_pi_x(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params,
                     bool normalized = false);

// integral of j0 over R^3 at t = 0 for the normalized state. The t = 0 slice
// stays axisymmetric under z-boosts, so boosted states are allowed.
double norm_integral(BispinorKind kind, const PacketParams& params);

}  // namespace hopfion
