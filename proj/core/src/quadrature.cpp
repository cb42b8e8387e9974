#include "hopfion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hopfion {
namespace {

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n. The recurrence
// (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1} and the derivative identity
// P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1) give machine-precision roots from
// the Chebyshev initial guess in a handful of iterations.
struct GaussRule {
    std::vector<double> x, w;

    explicit GaussRule(int n) : x(n), w(n) {
        for (int i = 0; i < n; ++i) {
            double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
            double pn = 0, pnm1 = 0;
            for (int iter = 0; iter < 100; ++iter) {
                pn = xi;
                pnm1 = 1.0;
                for (int k = 1; k < n; ++k) {
                    const double pnext = ((2 * k + 1) * xi * pn - k * pnm1) / (k + 1);
                    pnm1 = pn;
                    pn = pnext;
                }
                const double dpn = n * (xi * pn - pnm1) / (xi * xi - 1.0);
                const double dx = pn / dpn;
                xi -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            pn = xi;
            pnm1 = 1.0;
            for (int k = 1; k < n; ++k) {
                const double pnext = ((2 * k + 1) * xi * pn - k * pnm1) / (k + 1);
                pnm1 = pn;
                pn = pnext;
            }
            const double dpn = n * (xi * pn - pnm1) / (xi * xi - 1.0);
            x[i] = xi;
            w[i] = 2.0 / ((1.0 - xi * xi) * dpn * dpn);
        }
    }
};

const GaussRule& rule7() {
    static const GaussRule r(7);
    return r;
}
const GaussRule& rule15() {
    static const GaussRule r(15);
    return r;
}

double value_norm(double v) { return std::abs(v); }
double value_norm(cplx v) { return std::abs(v); }

template <class T, class F>
void eval_pair(const F& f, double a, double b, T& fine, double& err) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    T coarse{};
    fine = T{};
    for (int i = 0; i < 7; ++i) coarse += T(f(mid + half * rule7().x[i])) * rule7().w[i];
    for (int i = 0; i < 15; ++i) fine += T(f(mid + half * rule15().x[i])) * rule15().w[i];
    coarse *= half;
    fine *= half;
    err = value_norm(T(fine - coarse));
}

template <class T, class F>
QuadratureResult<T> adaptive(const F& f, double a, double b, const ToleranceConfig& tol) {
    tol.validate();
    if (!(a < b)) {
        if (a == b) return {T{}, 0.0, 1};
        throw DomainError("integrate_1d: empty or reversed interval");
    }

    struct Segment {
        double a, b, err;
        T val;
    };

    QuadratureResult<T> out;
    std::vector<Segment> segs;
    {
        Segment s{a, b, 0, T{}};
        eval_pair<T>(f, a, b, s.val, s.err);
        out.evaluations = 22;
        segs.push_back(s);
    }

    auto total_err = [&] {
        double e = 0;
        for (const auto& s : segs) e += s.err;
        return e;
    };
    auto total_val = [&] {
        T v{};
        for (const auto& s : segs) v += s.val;
        return v;
    };

    while (true) {
        const T v = total_val();
        const double e = total_err();
        const double target = std::max(tol.abs_tol, tol.rel_tol * value_norm(v));
        if (e <= target) {
            out.value = v;
            out.error_estimate = e;
            return out;
        }
        if (out.evaluations > tol.max_evals)
            throw ConvergenceError("integrate_1d: eval budget exhausted before convergence");

        // Split the worst segment.
        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const Segment& p, const Segment& q) { return p.err < q.err; });
        const Segment s = *worst;
        segs.erase(worst);
        const double mid = 0.5 * (s.a + s.b);
        if (!(s.a < mid && mid < s.b))
            throw ConvergenceError("integrate_1d: interval too small to split further");
        for (const auto& [lo, hi] : {std::pair{s.a, mid}, std::pair{mid, s.b}}) {
            Segment child{lo, hi, 0, T{}};
            eval_pair<T>(f, lo, hi, child.val, child.err);
            out.evaluations += 22;
            segs.push_back(child);
        }
    }
}

template <class T, class F>
QuadratureResult<T> semi_inf(const F& f, double a, const ToleranceConfig& tol, double scale) {
    if (!(scale > 0)) throw DomainError("integrate_semi_inf: scale must be positive");
    auto g = [&](double u) -> T {
        const double x = a - scale * std::log1p(-u);
        return T(f(x)) * (scale / (1.0 - u));
    };
    // Stop just short of u = 1; the clipped tail is below e^{-36} of the scale.
    return adaptive<T>(g, 0.0, 1.0 - 2.3e-16, tol);
}

}  // namespace

QuadratureResult<double> integrate_1d(const std::function<double(double)>& f, double a,
                                      double b, const ToleranceConfig& tol) {
    if (std::isinf(b)) return integrate_semi_inf(f, a, tol);
    return adaptive<double>(f, a, b, tol);
}

QuadratureResult<cplx> integrate_1d_c(const std::function<cplx(double)>& f, double a,
                                      double b, const ToleranceConfig& tol) {
    if (std::isinf(b)) return integrate_semi_inf_c(f, a, tol);
    return adaptive<cplx>(f, a, b, tol);
}

QuadratureResult<double> integrate_semi_inf(const std::function<double(double)>& f,
                                            double a, const ToleranceConfig& tol,
                                            double scale) {
    return semi_inf<double>(f, a, tol, scale);
}

QuadratureResult<cplx> integrate_semi_inf_c(const std::function<cplx(double)>& f, double a,
                                            const ToleranceConfig& tol, double scale) {
    return semi_inf<cplx>(f, a, tol, scale);
}

QuadratureResult<double> integrate_3d(const std::function<double(const Vec3&)>& f,
                                      const PacketParams& params, const ToleranceConfig& tol,
                                      bool axisymmetric) {
    params.validate();
    tol.validate();
    // Truncation radius: the envelope m e^{-2 m r} must fall below abs_tol,
    // pushed out by the packet size so the bulk is always covered.
    const double m = params.m, a = params.a;
    const double r_decay = std::log(std::max(m, 1.0) / tol.abs_tol) / (2.0 * m);
    const double r_cut = 6.0 * a + 4.0 / m + std::max(r_decay, 0.0);

    long evals = 0;
    ToleranceConfig inner = tol;
    inner.rel_tol = tol.rel_tol / 4;
    inner.abs_tol = tol.abs_tol / 4;

    auto shell = [&](double r) {
        auto over_theta = [&](double th) {
            const double st = std::sin(th), ct = std::cos(th);
            if (axisymmetric) {
                ++evals;
                return 2.0 * pi * st * f(Vec3{r * st, 0.0, r * ct});
            }
            auto over_phi = [&](double ph) {
                ++evals;
                return f(Vec3{r * st * std::cos(ph), r * st * std::sin(ph), r * ct});
            };
            return st * adaptive<double>(over_phi, 0.0, 2.0 * pi, inner).value;
        };
        return r * r * adaptive<double>(over_theta, 0.0, pi, inner).value;
    };

    auto result = adaptive<double>(shell, 0.0, r_cut, tol);
    result.evaluations = evals;
    return result;
}

}  // namespace hopfion
