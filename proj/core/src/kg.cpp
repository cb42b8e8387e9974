#include "hopfion/kg.hpp"

#include <cmath>

#include "hopfion/bessel.hpp"
#include "hopfion/deriv.hpp"
#include "hopfion/quadrature.hpp"

namespace hopfion {
namespace {

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

// K_{nu}(m s) / s^{nu}; the building block whose s-derivative lowers to the
// next block: d/ds H_nu = -m s H_{nu+1}.
cplx h_block(int nu, double m, cplx s) { return bessel_k(nu, m * s) / ipow(s, nu); }

}  // namespace

cplx complex_radius(const SpaceTimePoint& p, const PacketParams& params) {
    params.validate();
    const double g = params.gamma();
    const cplx s2{p.r2() - p.t * p.t + params.a * params.a,
                  2.0 * params.a * g * (p.t - params.v * p.z)};
    if (s2.imag() == 0.0 && s2.real() <= 0.0)
        throw DomainError("complex_radius: radicand on the closed negative real axis");
    return std::sqrt(s2);  // principal branch; Re s > 0 off the rejected set
}

cplx scalar_field(const SpaceTimePoint& p, const PacketParams& params) {
    const cplx s = complex_radius(p, params);
    const cplx xp{p.x, p.y};
    return ipow(xp, params.l) * params.m * h_block(params.l + 1, params.m, s);
}

cplx scalar_field_massless(const SpaceTimePoint& p, double a, int l) {
    PacketParams rest{l, a, 1.0, 0.0};
    const cplx s = complex_radius(p, rest);
    const cplx xp{p.x, p.y};
    return ipow(xp, l) / ipow(s, 2 * l + 2);
}

ScalarGradient scalar_gradient(const SpaceTimePoint& p, const PacketParams& params) {
    const cplx s = complex_radius(p, params);
    const double m = params.m, g = params.gamma();
    const int l = params.l;
    const cplx xp{p.x, p.y};
    const cplx xp_lm1 = (l >= 1) ? ipow(xp, l - 1) : cplx{};
    const cplx xp_l = ipow(xp, l);
    const cplx h1 = h_block(l + 1, m, s);
    const cplx h2 = h_block(l + 2, m, s);

    // d s^2/dc = (2x, 2y, 2z - 2 i a g v, -2t + 2 i a g); gradient of f via
    // d/ds H_{l+1} = -m s H_{l+2} cancels one factor of s throughout.
    ScalarGradient out;
    const cplx common = -m * m * xp_l * h2;
    out.dx = m * l * xp_lm1 * h1 + common * p.x;
    out.dy = cplx{0, 1} * m * double(l) * xp_lm1 * h1 + common * p.y;
    out.dz = common * cplx{p.z, -params.a * g * params.v};
    out.dt = -common * cplx{p.t, -params.a * g};
    return out;
}

double kg_residual(const SpaceTimePoint& p, const PacketParams& params) {
    const double m = params.m;
    // Boosts compress the z/t variation scale by gamma; shrink those stencils
    // to match or the differences straddle whole phase oscillations.
    const double hlong = 0.1 / params.gamma();
    auto d2 = [&](auto pick, auto shift, double h0) {
        std::function<cplx(double)> f = [&](double h) {
            SpaceTimePoint q = p;
            shift(q, h);
            return pick(scalar_gradient(q, params));
        };
        DerivResult best = richardson_derivative(f, 0.0, 1, h0, 1e-10);
        for (double hr : {h0 / 4, h0 / 16}) {
            if (best.error_estimate <= 1e-12 + 1e-10 * std::abs(best.value)) break;
            const DerivResult r = richardson_derivative(f, 0.0, 1, hr, 1e-10);
            if (r.error_estimate < best.error_estimate) best = r;
        }
        return best.value;
    };
    const cplx ftt = d2([](const ScalarGradient& gr) { return gr.dt; },
                        [](SpaceTimePoint& q, double h) { q.t += h; }, hlong);
    const cplx fxx = d2([](const ScalarGradient& gr) { return gr.dx; },
                        [](SpaceTimePoint& q, double h) { q.x += h; }, 0.1);
    const cplx fyy = d2([](const ScalarGradient& gr) { return gr.dy; },
                        [](SpaceTimePoint& q, double h) { q.y += h; }, 0.1);
    const cplx fzz = d2([](const ScalarGradient& gr) { return gr.dz; },
                        [](SpaceTimePoint& q, double h) { q.z += h; }, hlong);
    const cplx f = scalar_field(p, params);
    const double scale = std::abs(ftt) + std::abs(fxx) + std::abs(fyy) + std::abs(fzz) +
                         m * m * std::abs(f) + 1e-300;
    return std::abs(ftt - fxx - fyy - fzz + m * m * f) / scale;
}

double kg_residual_massless(const SpaceTimePoint& p, double a, int l) {
    auto d2 = [&](auto shift) {
        auto f = [&](double h) {
            SpaceTimePoint q = p;
            shift(q, h);
            return scalar_field_massless(q, a, l);
        };
        return richardson_derivative(f, 0.0, 2, 0.1, 1e-9).value;
    };
    const cplx ftt = d2([](SpaceTimePoint& q, double h) { q.t += h; });
    const cplx fxx = d2([](SpaceTimePoint& q, double h) { q.x += h; });
    const cplx fyy = d2([](SpaceTimePoint& q, double h) { q.y += h; });
    const cplx fzz = d2([](SpaceTimePoint& q, double h) { q.z += h; });
    const double scale =
        std::abs(ftt) + std::abs(fxx) + std::abs(fyy) + std::abs(fzz) + 1e-300;
    return std::abs(ftt - fxx - fyy - fzz) / scale;
}

cplx momentum_oracle(const SpaceTimePoint& p, const PacketParams& params) {
    params.validate();
    if (params.v != 0) throw DomainError("momentum_oracle: rest frame only");
    const double m = params.m, a = params.a, t = p.t;
    const double r = std::sqrt(p.r2());
    const cplx at{a, t};

    ToleranceConfig tol{1e-11, 1e-13, 40'000'000};
    // The integrand decays like e^{-a q}, so the change of variable must span
    // several decay lengths 1/a or the implicit truncation bites first.
    const double scale = 2.0 / a;
    if (r < 1e-8) {
        // r -> 0: sin(pr)/r -> p.
        auto f = [&](double q) {
            const double e = std::sqrt(m * m + q * q);
            return (q * q / e) * std::exp(-at * e);
        };
        return integrate_semi_inf_c(f, 0.0, tol, scale).value;
    }
    auto f = [&](double q) {
        const double e = std::sqrt(m * m + q * q);
        return (q / e) * std::sin(q * r) * std::exp(-at * e);
    };
    return integrate_semi_inf_c(f, 0.0, tol, scale).value / r;
}

}  // namespace hopfion
