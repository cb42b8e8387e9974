#include "hopfion/dirac.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "hopfion/bessel.hpp"
#include "hopfion/deriv.hpp"
#include "hopfion/kg.hpp"
#include "hopfion/quadrature.hpp"

namespace hopfion {
namespace {

constexpr cplx I{0, 1};

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

GammaAlgebra build_gamma() {
    GammaAlgebra g{};
    // Pauli matrices.
    const cplx sx[2][2] = {{0, 1}, {1, 0}};
    const cplx sy[2][2] = {{0, -I}, {I, 0}};
    const cplx sz[2][2] = {{1, 0}, {0, -1}};
    const cplx id[2][2] = {{1, 0}, {0, 1}};

    // gamma^0 = [[0, I], [I, 0]]; gamma^i = [[0, -sigma_i], [sigma_i, 0]]:
    // the split Dirac system then reads i sigma^mu d_mu (upper) = m (lower)
    // with sigma^mu = (I, sigma), sigmatilde^mu = (I, -sigma).
    auto fill = [](Mat4& m, const cplx ur[2][2], const cplx ll[2][2]) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                m[i][j + 2] = ur[i][j];
                m[i + 2][j] = ll[i][j];
            }
    };
    fill(g.gamma[0], id, id);
    const cplx nsx[2][2] = {{0, -1}, {-1, 0}};
    const cplx nsy[2][2] = {{0, I}, {-I, 0}};
    const cplx nsz[2][2] = {{-1, 0}, {0, 1}};
    fill(g.gamma[1], nsx, sx);
    fill(g.gamma[2], nsy, sy);
    fill(g.gamma[3], nsz, sz);

    Mat4 g5 = mat_mul(mat_mul(g.gamma[0], g.gamma[1]), mat_mul(g.gamma[2], g.gamma[3]));
    for (auto& row : g5)
        for (auto& e : row) e *= I;
    g.gamma5 = g5;

    g.sigma_z4 = {};
    g.sigma_z4[0][0] = 1;
    g.sigma_z4[1][1] = -1;
    g.sigma_z4[2][2] = 1;
    g.sigma_z4[3][3] = -1;
    return g;
}

cplx ipow(cplx z, int n) {
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

double rpow(double z, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

struct ClosedPieces {
    cplx f_l, f_l1;   // f_l and f_{l+1}
    cplx h2;          // K_{l+2}(m s) / s^{l+2}
    double R;         // rho^{2l} m^2 |h2|^2  (= |f_{l+1}|^2 / rho^2, regularized)
    cplx c_plus, c_minus;  // a g (1 -+ v) + i (t -+ z)
};

ClosedPieces pieces(const SpaceTimePoint& p, const PacketParams& params) {
    const cplx s = complex_radius(p, params);
    const double m = params.m, g = params.gamma();
    const int l = params.l;
    const cplx xp{p.x, p.y};

    ClosedPieces out;
    const cplx h1 = bessel_k(l + 1, m * s) / ipow(s, l + 1);
    out.h2 = bessel_k(l + 2, m * s) / ipow(s, l + 2);
    out.f_l = ipow(xp, l) * m * h1;
    out.f_l1 = ipow(xp, l + 1) * m * out.h2;
    out.R = rpow(p.rho2(), l) * m * m * std::norm(out.h2);
    out.c_plus = cplx{params.a * g * (1 - params.v), p.t - p.z};
    out.c_minus = cplx{params.a * g * (1 + params.v), p.t + p.z};
    return out;
}

double norm_factor(BispinorKind kind, const PacketParams& params, bool normalized) {
    if (!normalized) return 1.0;
    double n = normalization_constant(kind, params).N;
    if (params.v != 0) n /= std::sqrt(boost_norm_factor(kind, params));
    return n;
}

}  // namespace

const GammaAlgebra& gamma_algebra() {
    static const GammaAlgebra g = build_gamma();
    return g;
}

Bispinor mat_vec(const Mat4& m, const Bispinor& v) {
    Bispinor out{};
    for (int i = 0; i < 4; ++i) {
        cplx s = 0;
        for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

NormalizationConstant normalization_constant(BispinorKind kind, const PacketParams& params) {
    params.validate();
    const int leff =
        (kind == BispinorKind::PhiPlus || kind == BispinorKind::PhiMinus) ? params.l + 1
                                                                          : params.l;
    const double am = params.a * params.m;
    const double k = bessel_k(leff + 2, cplx{2 * am, 0}).real();
    const double inv_n2 =
        2.0 * params.m * pi * pi * std::tgamma(leff + 1.0) * k / rpow(am, leff + 1);
    return {1.0 / std::sqrt(inv_n2), leff};
}

double boost_norm_factor(BispinorKind kind, const PacketParams& params) {
    params.validate();
    if (params.v == 0) return 1.0;
    const double g = params.gamma();
    if (kind == BispinorKind::PsiPlus) return g * (1 - params.v);
    if (kind == BispinorKind::PsiMinus) return g * (1 + params.v);

    // Phi+-: no closed factor; integrate j0 of the rest-normalized state once.
    static std::map<std::tuple<int, int, double, double, double>, double> cache;
    static std::mutex mu;
    const auto key = std::make_tuple(int(kind), params.l, params.a, params.m, params.v);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const double n = normalization_constant(kind, params).N;
    auto j0 = [&](const Vec3& r) {
        Bispinor b = bispinor(kind, {r.x, r.y, r.z, 0.0}, params, false);
        double s = 0;
        for (const auto& c : b) s += std::norm(c);
        return n * n * s;
    };
    const double val = integrate_3d(j0, params, ToleranceConfig::quadrature_3d(), true).value;
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = val;
    return val;
}

Bispinor bispinor(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params,
                  bool normalized) {
    params.validate();
    const double nf = norm_factor(kind, params, normalized);
    const double m = params.m;

    if (kind == BispinorKind::PsiPlus || kind == BispinorKind::PsiMinus) {
        const ClosedPieces cp = pieces(p, params);
        const cplx xp_l = ipow(cplx{p.x, p.y}, params.l);
        // (i/m)(f_t +- f_z) = m c_+- (x+iy)^l K_{l+2}(ms)/s^{l+2}: the
        // closed form with the removable x+iy = 0 singularity eliminated.
        const cplx grad_plus = m * cp.c_plus * xp_l * cp.h2;
        const cplx grad_minus = m * cp.c_minus * xp_l * cp.h2;
        if (kind == BispinorKind::PsiPlus)
            return {nf * cp.f_l, 0.0, nf * grad_plus, nf * (-I * cp.f_l1)};
        return {nf * grad_minus, nf * (I * cp.f_l1), nf * cp.f_l, 0.0};
    }

    // Phi+- ride on f_{l+1}.
    PacketParams up = params;
    up.l = params.l + 1;
    const cplx f1 = scalar_field(p, up);
    const ScalarGradient gr = scalar_gradient(p, up);
    const cplx gm = (I / m) * (gr.dx - I * gr.dy);
    const cplx gtmz = (I / m) * (gr.dt - gr.dz);
    const cplx gtpz = (I / m) * (gr.dt + gr.dz);
    if (kind == BispinorKind::PhiPlus) return {0.0, nf * f1, nf * gm, nf * gtmz};
    return {nf * (-gm), nf * gtpz, 0.0, nf * f1};
}

namespace {

// gamma^0 gamma^i = diag(sigma_i, -sigma_i): j^i = phi+ sigma_i phi - chi+ sigma_i chi.
FourCurrent bilinear_of(const Bispinor& b) {
    FourCurrent j;
    j.j0 = std::norm(b[0]) + std::norm(b[1]) + std::norm(b[2]) + std::norm(b[3]);
    j.jx = 2 * std::real(std::conj(b[0]) * b[1]) - 2 * std::real(std::conj(b[2]) * b[3]);
    j.jy = 2 * std::imag(std::conj(b[0]) * b[1]) - 2 * std::imag(std::conj(b[2]) * b[3]);
    j.jz = std::norm(b[0]) - std::norm(b[1]) - std::norm(b[2]) + std::norm(b[3]);
    return j;
}

FourCurrent scaled(FourCurrent j, double s) {
    j.j0 *= s;
    j.jx *= s;
    j.jy *= s;
    j.jz *= s;
    return j;
}

}  // namespace

FourCurrent four_current_bilinear(BispinorKind kind, const SpaceTimePoint& p,
                                  const PacketParams& params) {
    return bilinear_of(bispinor(kind, p, params, true));
}

FourCurrent four_current_raw(BispinorKind kind, const SpaceTimePoint& p,
                             const PacketParams& params) {
    if (kind == BispinorKind::PhiPlus || kind == BispinorKind::PhiMinus)
        return bilinear_of(bispinor(kind, p, params, false));

    const double sign = (kind == BispinorKind::PsiPlus) ? 1.0 : -1.0;
    const ClosedPieces cp = pieces(p, params);
    const cplx c = (sign > 0) ? cp.c_plus : cp.c_minus;
    const double A = c.real(), u = c.imag();
    const double fl2 = std::norm(cp.f_l), fl12 = std::norm(cp.f_l1);
    const double w2 = (A * A + u * u) * cp.R;

    FourCurrent j;
    j.j0 = fl2 + fl12 + w2;
    j.jx = 2 * (p.x * u - A * p.y) * cp.R;
    j.jy = 2 * (p.y * u + A * p.x) * cp.R;
    j.jz = sign * (fl2 + fl12 - w2);
    return j;
}

FourCurrent four_current(BispinorKind kind, const SpaceTimePoint& p,
                         const PacketParams& params) {
    const double n = norm_factor(kind, params, true);
    return scaled(four_current_raw(kind, p, params), n * n);
}

namespace {

// Richardson with error-driven step refinement: where the tableau stalls
// (small-radius points see azimuthal structure finer than the first step),
// restart from a smaller h0 and keep the best-converged estimate.
cplx stable_derivative(const std::function<cplx(double)>& f, double h0) {
    DerivResult best = richardson_derivative(f, 0.0, 1, h0, 1e-10);
    for (double h : {h0 / 4, h0 / 16}) {
        if (best.error_estimate <= 1e-12 + 1e-10 * std::abs(best.value)) break;
        const DerivResult r = richardson_derivative(f, 0.0, 1, h, 1e-10);
        if (r.error_estimate < best.error_estimate) best = r;
    }
    return best.value;
}

}  // namespace

double dirac_residual(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params) {
    const double m = params.m;
    // d_mu of every component by Richardson on the analytic bispinor. The z/t
    // stencils shrink by gamma so they resolve the boost-contracted profile.
    const double hlong = 0.1 / params.gamma();
    Bispinor d[4];  // index: t, x, y, z
    for (int axis = 0; axis < 4; ++axis)
        for (int comp = 0; comp < 4; ++comp) {
            auto f = [&](double h) {
                SpaceTimePoint q = p;
                (axis == 0 ? q.t : axis == 1 ? q.x : axis == 2 ? q.y : q.z) += h;
                return bispinor(kind, q, params, false)[comp];
            };
            const double h0 = (axis == 0 || axis == 3) ? hlong : 0.1;
            d[axis][comp] = stable_derivative(f, h0);
        }
    const Bispinor b = bispinor(kind, p, params, false);

    // i sigma^mu d_mu phi = m chi (sigma^mu = (I, sigma)) and
    // i sigmatilde^mu d_mu chi = m phi. Each equation is scored against the
    // magnitudes of its own terms, so axis zeros of the field do not inflate it.
    struct Eq {
        cplx terms[5];
    };
    const Eq eqs[4] = {
        {{d[0][0], d[3][0], d[1][1], -I * d[2][1], I * m * b[2]}},
        {{d[1][0], I * d[2][0], d[0][1], -d[3][1], I * m * b[3]}},
        {{d[0][2], -d[3][2], -d[1][3], I * d[2][3], I * m * b[0]}},
        {{-d[1][2], -I * d[2][2], d[0][3], d[3][3], I * m * b[1]}},
    };
    double worst = 0;
    for (const auto& eq : eqs) {
        cplx sum = 0;
        double scale = 1e-300;
        for (const auto& term : eq.terms) {
            sum += term;
            scale += std::abs(term);
        }
        worst = std::max(worst, std::abs(sum) / scale);
    }
    return worst;
}

double current_conservation_residual(BispinorKind kind, const SpaceTimePoint& p,
                                     const PacketParams& params) {
    // Scale-free: the unnormalized current suffices.
    const double hlong = 0.1 / params.gamma();
    auto comp = [&](int axis, auto pick) {
        auto f = [&](double h) {
            SpaceTimePoint q = p;
            (axis == 0 ? q.t : axis == 1 ? q.x : axis == 2 ? q.y : q.z) += h;
            return cplx{pick(four_current_raw(kind, q, params)), 0.0};
        };
        const double h0 = (axis == 0 || axis == 3) ? hlong : 0.1;
        return stable_derivative(f, h0).real();
    };
    const double terms[4] = {comp(0, [](const FourCurrent& j) { return j.j0; }),
                             comp(1, [](const FourCurrent& j) { return j.jx; }),
                             comp(2, [](const FourCurrent& j) { return j.jy; }),
                             comp(3, [](const FourCurrent& j) { return j.jz; })};
    const double j0 = four_current_raw(kind, p, params).j0;
    // The j0 scale alone dies on the axis zeros of the phi states, so the
    // local derivative magnitudes join the denominator.
    double scale = params.m * j0 + 1e-300;
    double div = 0;
    for (double term : terms) {
        div += term;
        scale += std::abs(term);
    }
    return std::abs(div) / scale;
}

namespace {

cplx mz_of_field(const std::function<Bispinor(const SpaceTimePoint&)>& field,
                 const SpaceTimePoint& p) {
    const Bispinor b = field(p);
    int kmax = 0;
    for (int k = 1; k < 4; ++k)
        if (std::abs(b[k]) > std::abs(b[kmax])) kmax = k;
    if (std::abs(b[kmax]) < 1e-12)
        throw DegenerateError("mz_check: all components below threshold");

    const double rho = std::sqrt(p.rho2());
    const double phi0 = std::atan2(p.y, p.x);
    // -i(x d_y - y d_x) is -i d/dphi along the azimuthal circle through p.
    auto along = [&](double dphi) {
        const SpaceTimePoint q{rho * std::cos(phi0 + dphi), rho * std::sin(phi0 + dphi),
                               p.z, p.t};
        return field(q)[kmax];
    };
    const cplx dphi = richardson_derivative(along, 0.0, 1, 0.2, 1e-9).value;
    const double sz = (kmax == 0 || kmax == 2) ? 0.5 : -0.5;  // Sigma_z/2 diag
    return (-I * dphi + sz * b[kmax]) / b[kmax];
}

}  // namespace

cplx mz_check(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params) {
    return mz_of_field(
        [&](const SpaceTimePoint& q) { return bispinor(kind, q, params, false); }, p);
}

cplx mz_check_rotated(BispinorKind kind, const SpaceTimePoint& p,
                      const PacketParams& params) {
    return mz_of_field(
        [&](const SpaceTimePoint& q) { return rotate_pi_x(kind, q, params, false); }, p);
}

Bispinor rotate_pi_x(BispinorKind kind, const SpaceTimePoint& p, const PacketParams& params,
                     bool normalized) {
    const Bispinor b = bispinor(kind, {p.x, -p.y, -p.z, p.t}, params, normalized);
    // -i Sigma_x swaps within each Weyl pair: (b2, b1, b4, b3) times -i.
    return {-I * b[1], -I * b[0], -I * b[3], -I * b[2]};
}

double norm_integral(BispinorKind kind, const PacketParams& params) {
    params.validate();
    // The t = 0 slice is axisymmetric for any boost along z.
    auto j0 = [&](const Vec3& r) {
        return four_current(kind, {r.x, r.y, r.z, 0.0}, params).j0;
    };
    return integrate_3d(j0, params, ToleranceConfig::quadrature_3d(), true).value;
}

}  // namespace hopfion
