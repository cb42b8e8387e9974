#include "hopfion/ode.hpp"

#include <algorithm>
#include <cmath>

namespace hopfion {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695, e4 = b4 - 393.0 / 640,
                 e5 = b5 + 92097.0 / 339200, e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

}  // namespace

StreamlineTrace ode_trace(const std::function<Vec3(const Vec3&)>& field, const Vec3& seed,
                          double lambda_max, const OdeControl& ctl) {
    if (!(lambda_max > 0)) throw DomainError("ode_trace: lambda_max must be positive");

    StreamlineTrace tr;
    tr.seed = seed;
    tr.points.push_back(seed);
    tr.lambdas.push_back(0.0);

    Vec3 r = seed;
    Vec3 k1 = field(r);
    double lam = 0.0;
    double h = std::min(ctl.max_step, lambda_max / 16.0);

    for (long step = 0; step < ctl.max_steps && lam < lambda_max; ++step) {
        // Clamp a copy for the step so the controller's h never inherits the
        // (possibly tiny) end-of-interval remainder and trips the underflow
        // guard on a trace that is in fact finished.
        const bool last = lambda_max - lam <= h;
        const double hs = last ? lambda_max - lam : h;
        const Vec3 k2 = field(r + hs * (a21 * k1));
        const Vec3 k3 = field(r + hs * (a31 * k1 + a32 * k2));
        const Vec3 k4 = field(r + hs * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vec3 k5 = field(r + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vec3 k6 = field(r + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vec3 rnew = r + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vec3 k7 = field(rnew);
        const Vec3 errv = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double scale =
            ctl.abs_tol + ctl.rel_tol * std::max(r.norm(), rnew.norm());
        const double err = errv.norm() / scale;

        if (err <= 1.0) {
            lam = last ? lambda_max : lam + hs;
            r = rnew;
            k1 = k7;  // FSAL
            tr.points.push_back(r);
            tr.lambdas.push_back(lam);
        }
        const double grow = (err > 0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
        h = std::min(h, ctl.max_step);
        if (h < ctl.min_step) {
            tr.aborted = true;
            return tr;
        }
    }
    if (lam < lambda_max) tr.aborted = true;
    return tr;
}

double StreamlineTrace::diameter() const {
    // Max pairwise distance over a decimated point set; exact on <= 512
    // points, within one decimation spacing otherwise.
    const size_t n = points.size();
    if (n < 2) return 0.0;
    const size_t stride = std::max<size_t>(1, n / 512);
    double d2 = 0;
    for (size_t i = 0; i < n; i += stride)
        for (size_t j = i + stride; j < n; j += stride)
            d2 = std::max(d2, (points[i] - points[j]).norm2());
    return std::sqrt(d2);
}

double StreamlineTrace::arc_length() const {
    double s = 0;
    for (size_t i = 1; i < points.size(); ++i) s += (points[i] - points[i - 1]).norm();
    return s;
}

StreamlineTrace StreamlineTrace::resampled(int n) const {
    if (n < 2) throw DomainError("resampled: need at least 2 points");
    if (points.size() < 2) return *this;

    std::vector<double> cum(points.size(), 0.0);
    for (size_t i = 1; i < points.size(); ++i)
        cum[i] = cum[i - 1] + (points[i] - points[i - 1]).norm();
    const double total = cum.back();

    StreamlineTrace out;
    out.seed = seed;
    out.closed_hint = closed_hint;
    out.aborted = aborted;
    for (int k = 0; k < n; ++k) {
        const double s = total * k / (n - 1);
        const auto it = std::lower_bound(cum.begin(), cum.end(), s);
        size_t j = std::min<size_t>(it - cum.begin(), cum.size() - 1);
        if (j == 0) j = 1;
        const double seg = cum[j] - cum[j - 1];
        const double w = seg > 0 ? (s - cum[j - 1]) / seg : 0.0;
        out.points.push_back(points[j - 1] + w * (points[j] - points[j - 1]));
        out.lambdas.push_back(s);  // arc-length parameterization
    }
    return out;
}

}  // namespace hopfion
