#include "hopfion/dynamics.hpp"

#include <cmath>
#include <string>

#include "hopfion/dirac.hpp"
#include "hopfion/quadrature.hpp"

namespace hopfion {
namespace {

int effective_l(BispinorKind kind, const PacketParams& params) {
    return (kind == BispinorKind::PhiPlus || kind == BispinorKind::PhiMinus)
               ? params.l + 1
               : params.l;
}

double rpow(double z, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

void require_rest(const PacketParams& params, const char* who) {
    if (params.v != 0)
        throw DomainError(std::string(who) + ": rest frame only (v = 0)");
}

// I(k) = int_0^inf p^k exp(-2 a E(p)) dp.  The overall e^{-2am} is pulled out
// so the quadrature works on an O(1) integrand; otherwise the absolute floor
// of the tolerance dominates once 2am is large (a = 10 already costs e^{-20}).
double radial_integral(int k, const PacketParams& params) {
    const double a = params.a, m = params.m;
    auto f = [&](double p) {
        return rpow(p, k) * std::exp(-2 * a * (std::sqrt(m * m + p * p) - m));
    };
    const ToleranceConfig tol{1e-12, 1e-15, 20'000'000};
    return std::exp(-2 * a * m) * integrate_semi_inf(f, 0.0, tol, (k + 2) / (2 * a)).value;
}

}  // namespace

double momentum_density(const Vec3& pvec, BispinorKind kind, const PacketParams& params) {
    params.validate();
    require_rest(params, "momentum_density");
    const int q = effective_l(kind, params);
    const double n = normalization_constant(kind, params).N;
    const double e = std::sqrt(params.m * params.m + pvec.norm2());
    return pi * n * n / rpow(params.m, 2 * q + 2) * rpow(pvec.x * pvec.x + pvec.y * pvec.y, q) *
           std::exp(-2 * params.a * e);
}

double momentum_total(BispinorKind kind, const PacketParams& params) {
    params.validate();
    require_rest(params, "momentum_total");
    const int q = effective_l(kind, params);
    const double n = normalization_constant(kind, params).N;
    const double fq = std::tgamma(q + 1.0);
    const double angular = 2 * pi * rpow(2.0, 2 * q + 1) * fq * fq / std::tgamma(2 * q + 2.0);
    return pi * n * n / rpow(params.m, 2 * q + 2) * angular *
           radial_integral(2 * q + 2, params);
}

double momentum_p2(BispinorKind kind, const PacketParams& params) {
    params.validate();
    require_rest(params, "momentum_p2");
    const int q = effective_l(kind, params);
    return radial_integral(2 * q + 4, params) / radial_integral(2 * q + 2, params);
}

double momentum_b(BispinorKind kind, const PacketParams& params) {
    params.validate();
    require_rest(params, "momentum_b");
    const int q = effective_l(kind, params);
    const double m = params.m, a = params.a;
    auto f = [&](double p) {
        const double e2 = m * m + p * p;
        return rpow(p, 2 * q + 4) / e2 * std::exp(-2 * a * (std::sqrt(e2) - m));
    };
    const ToleranceConfig tol{1e-12, 1e-15, 20'000'000};
    const double num =
        std::exp(-2 * a * m) * integrate_semi_inf(f, 0.0, tol, (2 * q + 6) / (2 * a)).value;
    return num / radial_integral(2 * q + 2, params);
}

double momentum_pz(BispinorKind kind, const PacketParams& params) {
    params.validate();
    require_rest(params, "momentum_pz");
    const int q = effective_l(kind, params);
    // Separable: the polar factor int_0^pi cos(th) sin(th)^{2q+1} dth is odd
    // about pi/2; quadrature returns its rounding-level value.
    const ToleranceConfig tol{1e-12, 1e-15, 20'000'000};
    auto polar = [&](double th) {
        return std::cos(th) * rpow(std::sin(th), 2 * q + 1);
    };
    const double ang = integrate_1d(polar, 0.0, pi, tol).value;
    const double rad = radial_integral(2 * q + 3, params);
    const double n = normalization_constant(kind, params).N;
    return 2 * pi * pi * n * n / rpow(params.m, 2 * q + 2) * ang * rad;
}

double spatial_moment(BispinorKind kind, const PacketParams& params, double t) {
    params.validate();
    require_rest(params, "spatial_moment");
    auto f = [&](const Vec3& r) {
        return r.norm2() * four_current(kind, {r.x, r.y, r.z, t}, params).j0;
    };
    // Widen the truncation envelope to cover light-cone spreading up to |t|.
    PacketParams env = params;
    env.a = params.a + std::abs(t);
    return integrate_3d(f, env, ToleranceConfig::quadrature_3d(), true).value;
}

SpreadingFit spreading_fit(BispinorKind kind, const PacketParams& params,
                           std::vector<double> t_samples) {
    params.validate();
    require_rest(params, "spreading_fit");
    SpreadingFit fit;
    if (t_samples.empty()) {
        const double a = params.a;
        t_samples = {0, a / 2, a, 3 * a / 2, 2 * a};
    }
    if (t_samples.size() < 3)
        throw DomainError("spreading_fit: need at least 3 time samples");
    fit.t_samples = t_samples;
    for (double t : t_samples) fit.r2_values.push_back(spatial_moment(kind, params, t));

    // Normal equations for r2 = r2_0 + b t^2.
    double s0 = 0, s1 = 0, s2 = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < t_samples.size(); ++i) {
        const double u = t_samples[i] * t_samples[i], y = fit.r2_values[i];
        s0 += 1;
        s1 += u;
        s2 += u * u;
        sy += y;
        sxy += u * y;
    }
    const double det = s0 * s2 - s1 * s1;
    if (det == 0) throw DegenerateError("spreading_fit: degenerate time samples");
    fit.r2_0 = (s2 * sy - s1 * sxy) / det;
    fit.b = (s0 * sxy - s1 * sy) / det;

    double rss = 0, mean = 0;
    for (std::size_t i = 0; i < t_samples.size(); ++i) {
        const double u = t_samples[i] * t_samples[i];
        const double d = fit.r2_values[i] - fit.r2_0 - fit.b * u;
        rss += d * d;
        mean += fit.r2_values[i];
    }
    mean /= double(t_samples.size());
    fit.residual = std::sqrt(rss / double(t_samples.size())) / mean;
    return fit;
}

UncertaintyResult uncertainty_product(BispinorKind kind, const PacketParams& params) {
    params.validate();
    require_rest(params, "uncertainty_product");
    UncertaintyResult u;
    u.r2_mean = spatial_moment(kind, params, 0);
    u.p2_mean = momentum_p2(kind, params);
    u.pz_mean = momentum_pz(kind, params);
    u.dr = std::sqrt(u.r2_mean);
    u.dp = std::sqrt(u.p2_mean - u.pz_mean * u.pz_mean);
    u.product = u.dr * u.dp;
    return u;
}

ChargeProfile charge_profile(BispinorKind kind, const PacketParams& params,
                             double half_width_x, double half_width_z, int nx, int nz,
                             ProfileMode mode, double t) {
    params.validate();
    if (nx < 2 || nz < 2) throw DomainError("charge_profile: grid must be at least 2x2");
    if (half_width_x <= 0 || half_width_z <= 0)
        throw DomainError("charge_profile: half widths must be > 0");

    ChargeProfile prof;
    const double dx = 2 * half_width_x / nx, dz = 2 * half_width_z / nz;
    for (int i = 0; i < nx; ++i) prof.x.push_back(-half_width_x + (i + 0.5) * dx);
    for (int k = 0; k < nz; ++k) prof.z.push_back(-half_width_z + (k + 0.5) * dz);

    const ToleranceConfig tol{1e-9, 1e-12, 20'000'000};
    auto cell = [&](double x, double z) {
        if (mode == ProfileMode::Slice)
            return four_current(kind, {x, 0.0, z, t}, params).j0;
        auto f = [&](double y) {
            return four_current(kind, {x, y, z, t}, params).j0;
        };
        // j0 is even in y.
        return 2 * integrate_semi_inf(f, 0.0, tol, params.a + 1 / params.m).value;
    };

    double mass = 0, sx2 = 0, sz2 = 0, stot = 0;
    prof.density.assign(nx, std::vector<double>(nz, 0.0));
    for (int i = 0; i < nx; ++i)
        for (int k = 0; k < nz; ++k) {
            const double d = cell(prof.x[i], prof.z[k]);
            prof.density[i][k] = d;
            mass += d;
            stot += d;
            sx2 += d * prof.x[i] * prof.x[i];
            sz2 += d * prof.z[k] * prof.z[k];
        }
    prof.mass = mass * dx * dz;
    if (stot <= 0) throw DegenerateError("charge_profile: zero total density");
    prof.x_second_moment = sx2 / stot;
    prof.z_second_moment = sz2 / stot;
    return prof;
}

}  // namespace hopfion
