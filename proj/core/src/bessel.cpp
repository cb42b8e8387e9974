#include "hopfion/bessel.hpp"

#include <cmath>
#include <limits>

namespace hopfion {
namespace {

constexpr double euler_gamma = 0.5772156649015328606065120900824024;
constexpr int max_order = 16;

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Ascending series for K_0 and K_1 (small |z|), scaled by e^z.
//
//   I_0(z) = sum (z^2/4)^k / (k!)^2
//   I_1(z) = (z/2) sum (z^2/4)^k / (k! (k+1)!)
//   K_0(z) = -(ln(z/2) + gamma) I_0(z) + sum_{k>=1} H_k (z^2/4)^k / (k!)^2
//   K_1(z) = 1/z + ln(z/2) I_1(z) - (z/4) sum (H_k + H_{k+1} - 2 gamma)
//                                          (z^2/4)^k / (k! (k+1)!)
void series_k01(cplx z, cplx& k0, cplx& k1) {
    const cplx q = z * z * 0.25;
    const cplx lg = std::log(z * 0.5);

    cplx i0 = 1.0, term0 = 1.0;
    cplx sum0 = 0.0;
    cplx i1term = 1.0;  // (z^2/4)^k / (k! (k+1)!)
    cplx i1sum = 1.0;
    cplx sum1 = 1.0 - 2.0 * euler_gamma;  // k = 0 contribution of H_k + H_{k+1} - 2g
    double hk = 0.0;

    for (int k = 1; k < 60; ++k) {
        term0 *= q / double(k * k);
        i0 += term0;
        hk += 1.0 / k;
        sum0 += term0 * hk;
        i1term *= q / double(k * (k + 1));
        i1sum += i1term;
        sum1 += i1term * (2.0 * hk + 1.0 / (k + 1) - 2.0 * euler_gamma);
        if (std::abs(term0) < 1e-18 * std::abs(i0) &&
            std::abs(i1term) < 1e-18 * std::abs(i1sum))
            break;
    }
    const cplx i1 = 0.5 * z * i1sum;
    k0 = -(lg + euler_gamma) * i0 + sum0;
    k1 = 1.0 / z + lg * i1 - 0.25 * z * sum1;
}

// Steed/Lentz continued fraction CF2 for K_0 and K_1 (|z| >= ~1.8, Re z > 0),
// after the standard real-argument treatment of the modified Bessel pair;
// all iterates generalize verbatim to complex z in the right half-plane.
// Returns e^z K_0, e^z K_1 through the scaled outputs.
void cf2_k01_scaled(cplx z, cplx& k0s, cplx& k1s) {
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_iter = 20000;

    cplx b = 2.0 * (1.0 + z);
    cplx d = 1.0 / b;
    cplx delh = d, h = d;
    cplx q1 = 0.0, q2 = 1.0;
    const cplx a1 = 0.25;  // mu = 0
    cplx q = a1, c = a1, a = -a1;
    cplx s = 1.0 + q * delh;

    bool converged = false;
    for (int i = 2; i <= max_iter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / double(i);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) <= eps * std::abs(s)) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("bessel_k: continued fraction stalled");

    h = a1 * h;
    k0s = std::sqrt(pi / (2.0 * z)) / s;
    k1s = k0s * (z + 0.5 - h) / z;
}

void k01_scaled(cplx z, cplx& k0s, cplx& k1s) {
    const double az = std::abs(z);
    if (az < 1.8) {
        series_k01(z, k0s, k1s);
        const cplx ez = std::exp(z);
        k0s *= ez;
        k1s *= ez;
        return;
    }
    if (az > 2.2) {
        cf2_k01_scaled(z, k0s, k1s);
        return;
    }
    // Seam band: both methods must agree or the result is not trusted.
    cplx s0, s1;
    series_k01(z, s0, s1);
    const cplx ez = std::exp(z);
    s0 *= ez;
    s1 *= ez;
    cf2_k01_scaled(z, k0s, k1s);
    if (std::abs(s0 - k0s) > 2e-11 * std::abs(k0s) ||
        std::abs(s1 - k1s) > 2e-11 * std::abs(k1s))
        throw AccuracyError("bessel_k: series/continued-fraction mismatch at crossover");
}

cplx k_scaled(int nu, cplx z) {
    if (nu < 0 || nu > max_order)
        throw DomainError("bessel_k: order out of range");
    if (!is_finite(z) || !(z.real() > 0))
        throw DomainError("bessel_k: argument must satisfy Re z > 0");

    // Schwarz reflection keeps the working argument in the closed upper
    // half-plane and makes conjugate symmetry exact.
    const bool reflect = z.imag() < 0;
    if (reflect) z = std::conj(z);

    cplx k0, k1;
    k01_scaled(z, k0, k1);
    cplx result;
    if (nu == 0) {
        result = k0;
    } else if (nu == 1) {
        result = k1;
    } else {
        cplx km = k0, k = k1;
        for (int n = 1; n < nu; ++n) {
            const cplx kp = km + (2.0 * n / z) * k;
            km = k;
            k = kp;
        }
        result = k;
    }
    if (reflect) result = std::conj(result);
    if (!is_finite(result)) throw AccuracyError("bessel_k: non-finite result");
    return result;
}

}  // namespace

cplx bessel_k(int nu, cplx z) { return std::exp(-z) * k_scaled(nu, z); }

cplx bessel_k_scaled(int nu, cplx z) { return k_scaled(nu, z); }

}  // namespace hopfion
