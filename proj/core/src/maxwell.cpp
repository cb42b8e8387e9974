#include "hopfion/maxwell.hpp"

#include <cmath>

#include "hopfion/deriv.hpp"

namespace hopfion {
namespace {

constexpr cplx I{0, 1};

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

}  // namespace

std::array<cplx, 3> rs_vector(const SpaceTimePoint& p, int l, double a) {
    if (l < 0) throw DomainError("rs_vector: l must be >= 0");
    if (a <= 0) throw DomainError("rs_vector: a must be > 0");
    const cplx xm{p.x, -p.y};
    const cplx tau = cplx{p.t - p.z, a};
    const cplx sigma = p.r2() + cplx{a, -p.t} * cplx{a, -p.t};
    if (sigma == cplx{0, 0}) throw DomainError("rs_vector: sigma = 0");
    const cplx pref = ipow(xm, l) / ipow(sigma, l + 3);
    const cplx t2 = tau * tau, x2 = xm * xm;
    return {pref * (t2 - x2), pref * (-I) * (t2 + x2), pref * 2.0 * xm * tau};
}

DerivedEM derived_em(const std::array<cplx, 3>& F) {
    DerivedEM d;
    const double s2 = std::sqrt(2.0);
    d.E = {s2 * F[0].real(), s2 * F[1].real(), s2 * F[2].real()};
    d.B = {s2 * F[0].imag(), s2 * F[1].imag(), s2 * F[2].imag()};
    d.u = std::norm(F[0]) + std::norm(F[1]) + std::norm(F[2]);
    // P = Im(conj(F) x F) = E x B.
    d.P = {std::imag(std::conj(F[1]) * F[2] - std::conj(F[2]) * F[1]),
           std::imag(std::conj(F[2]) * F[0] - std::conj(F[0]) * F[2]),
           std::imag(std::conj(F[0]) * F[1] - std::conj(F[1]) * F[0])};
    if (d.u == 0) throw DegenerateError("derived_em: zero energy density");
    d.v = d.P / d.u;
    return d;
}

double maxwell_residual(const SpaceTimePoint& p, int l, double a) {
    // dF/d(axis) for all three components by Richardson extrapolation.
    cplx d[4][3];  // axis (t,x,y,z) by component
    for (int axis = 0; axis < 4; ++axis)
        for (int comp = 0; comp < 3; ++comp) {
            auto f = [&](double h) {
                SpaceTimePoint q = p;
                (axis == 0 ? q.t : axis == 1 ? q.x : axis == 2 ? q.y : q.z) += h;
                return rs_vector(q, l, a)[comp];
            };
            d[axis][comp] = richardson_derivative(f, 0.0, 1, 0.1, 1e-9).value;
        }
    const cplx curl[3] = {d[2][2] - d[3][1], d[3][0] - d[1][2], d[1][1] - d[2][0]};
    double faraday = 0, scale = 0;
    for (int c = 0; c < 3; ++c) {
        faraday = std::max(faraday, std::abs(cplx{0, 1} * d[0][c] - curl[c]));
        for (int axis = 0; axis < 4; ++axis) scale = std::max(scale, std::abs(d[axis][c]));
    }
    const double div = std::abs(d[1][0] + d[2][1] + d[3][2]);
    return std::max(faraday, div) / (scale + 1e-300);
}

double null_violation(const SpaceTimePoint& p, int l, double a) {
    const auto F = rs_vector(p, l, a);
    const cplx ff = F[0] * F[0] + F[1] * F[1] + F[2] * F[2];
    const double u = std::norm(F[0]) + std::norm(F[1]) + std::norm(F[2]);
    if (u == 0) throw DegenerateError("null_violation: zero field");
    return std::abs(ff) / u;
}

}  // namespace hopfion
