#include "hopfion/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hopfion/bessel.hpp"
#include "hopfion/dirac.hpp"
#include "hopfion/kg.hpp"

namespace hopfion {
namespace {

struct WD {
    Vec3 w;
    double d;
};

// Shared core of both velocity fields: w and D with A in place of a.
WD flow_parts(const SpaceTimePoint& p, double A) {
    const double u = p.t - p.z;
    const double rho2 = p.rho2();
    WD r;
    r.w = {2 * (p.x * u - A * p.y), 2 * (p.y * u + A * p.x), rho2 - A * A - u * u};
    r.d = rho2 + A * A + u * u;
    return r;
}

}  // namespace

Vec3 velocity_maxwell(const SpaceTimePoint& p, double a) {
    if (a <= 0) throw DomainError("velocity_maxwell: a must be > 0");
    const WD f = flow_parts(p, a);
    return f.w / f.d;  // d >= a^2 > 0
}

Vec3 velocity_dirac(const SpaceTimePoint& p, const PacketParams& params) {
    params.validate();
    const double A = params.a * params.gamma() * (1 - params.v);
    const WD f = flow_parts(p, A);
    const cplx s = complex_radius(p, params);
    const cplx ratio =
        s * bessel_k_scaled(params.l + 1, params.m * s) /
        bessel_k_scaled(params.l + 2, params.m * s);
    const double q = std::norm(ratio);
    return Vec3{f.w.x, f.w.y, f.w.z + q} / (f.d + q);
}

Stereographic hopf_map(const Vec3& v) {
    const double denom = 1 - v.z;
    if (std::abs(denom) < 1e-14 * (1 + v.norm())) return {cplx{0, 0}, true};
    return {cplx{v.x, v.y} / denom, false};
}

cplx upsilon_closed(const SpaceTimePoint& p, double a) {
    if (a <= 0) throw DomainError("upsilon_closed: a must be > 0");
    return cplx{p.x, p.y} / cplx{p.t - p.z, -a};
}

Vec3 hopf_level_line(cplx upsilon, double z, double t, double a) {
    const double u = t - z;
    return {u * upsilon.real() + a * upsilon.imag(),
            u * upsilon.imag() - a * upsilon.real(), z};
}

StreamlineTrace trace_line(TraceSource source, const Vec3& seed, double lambda_max,
                           const PacketParams& params, double t, const OdeControl& ctl) {
    params.validate();
    auto field = [&](const Vec3& r) -> Vec3 {
        const SpaceTimePoint p{r.x, r.y, r.z, t};
        Vec3 v;
        switch (source) {
            case TraceSource::VelocityMaxwell:
                v = velocity_maxwell(p, params.a);
                break;
            case TraceSource::VelocityDirac:
                v = velocity_dirac(p, params);
                break;
            case TraceSource::CurrentJPlus: {
                const FourCurrent j = four_current(BispinorKind::PsiPlus, p, params);
                v = j.spatial();
                break;
            }
        }
        const double n = v.norm();
        if (n < 1e-140) throw DegenerateError("trace_line: stagnation point");
        return v / n;
    };
    return ode_trace(field, seed, lambda_max, ctl);
}

double closure_metric(const StreamlineTrace& trace) {
    const auto& pts = trace.points;
    if (pts.size() < 3) throw DegenerateError("closure_metric: trace too short");
    const Vec3 seed = trace.seed;

    double dmax = 0;
    for (const auto& p : pts) dmax = std::max(dmax, (p - seed).norm());
    const double delta = 0.25 * dmax;
    if (delta <= 0) throw DegenerateError("closure_metric: degenerate trace");

    std::size_t dep = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if ((pts[i] - seed).norm() >= delta) {
            dep = i;
            break;
        }
    if (dep == pts.size())
        throw DegenerateError("closure_metric: trace never departed from seed");

    auto seg_dist = [&](const Vec3& a, const Vec3& b) {
        const Vec3 ab = b - a, as = seed - a;
        const double len2 = ab.norm2();
        double s = len2 > 0 ? std::clamp(as.dot(ab) / len2, 0.0, 1.0) : 0.0;
        return (a + s * ab - seed).norm();
    };
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = dep; i + 1 < pts.size(); ++i)
        best = std::min(best, seg_dist(pts[i], pts[i + 1]));

    const double diam = trace.diameter();
    if (diam <= 0) throw DegenerateError("closure_metric: zero diameter");
    return best / diam;
}

std::vector<Vec3> extract_closed_loop(const StreamlineTrace& trace) {
    const auto& pts = trace.points;
    if (pts.size() < 4) throw DegenerateError("extract_closed_loop: trace too short");
    const Vec3 seed = trace.seed;

    double dmax = 0;
    for (const auto& p : pts) dmax = std::max(dmax, (p - seed).norm());
    const double delta = 0.25 * dmax;

    std::size_t dep = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if ((pts[i] - seed).norm() >= delta) {
            dep = i;
            break;
        }
    if (dep == pts.size())
        throw DegenerateError("extract_closed_loop: trace never departed from seed");

    // First re-entry into a tight ball around the seed, then the local best.
    const double back = 0.05 * dmax;
    std::size_t ret = pts.size();
    for (std::size_t i = dep; i < pts.size(); ++i)
        if ((pts[i] - seed).norm() < back) {
            ret = i;
            break;
        }
    if (ret == pts.size())
        throw DegenerateError("extract_closed_loop: trace does not return to seed");
    while (ret + 1 < pts.size() &&
           (pts[ret + 1] - seed).norm() < (pts[ret] - seed).norm())
        ++ret;

    return std::vector<Vec3>(pts.begin(), pts.begin() + ret + 1);
}

namespace {

double gauss_pair(const Vec3& a1, const Vec3& b1, const Vec3& a2, const Vec3& b2,
                  double min_sep, int depth) {
    const Vec3 m1 = 0.5 * (a1 + b1), m2 = 0.5 * (a2 + b2);
    const Vec3 d1 = b1 - a1, d2 = b2 - a2;
    const Vec3 r = m1 - m2;
    const double dist = r.norm();
    if (dist < min_sep)
        throw DomainError("linking_number: curves closer than resolution");
    const double span = d1.norm() + d2.norm();
    if (depth < 10 && dist < 2 * span) {
        // Too coarse at this separation: split both segments.
        double s = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                s += gauss_pair(i ? m1 : a1, i ? b1 : m1, j ? m2 : a2, j ? b2 : m2,
                                min_sep, depth + 1);
        return s;
    }
    const double d3 = dist * dist * dist;
    return r.dot(d1.cross(d2)) / d3;
}

}  // namespace

double linking_number(const std::vector<Vec3>& c1, const std::vector<Vec3>& c2,
                      double min_separation) {
    if (c1.size() < 3 || c2.size() < 3)
        throw DomainError("linking_number: need at least 3 vertices per curve");
    double sum = 0;
    const std::size_t n1 = c1.size(), n2 = c2.size();
    for (std::size_t i = 0; i < n1; ++i) {
        const Vec3& a1 = c1[i];
        const Vec3& b1 = c1[(i + 1) % n1];
        for (std::size_t j = 0; j < n2; ++j)
            sum += gauss_pair(a1, b1, c2[j], c2[(j + 1) % n2], min_separation, 0);
    }
    return sum / (4 * pi);
}

}  // namespace hopfion
