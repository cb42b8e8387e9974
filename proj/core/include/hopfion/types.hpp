#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hopfion {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Thrown when an input leaves the operating domain (branch cut, Re z <= 0, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two internal methods disagree beyond tolerance, or an error
// estimate exceeds what the caller asked for.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an iterative scheme exhausts its budget without converging.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a quantity is evaluated at a degenerate point (|field| ~ 0).
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {x * c, y * c, z * c}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

// Event (x, y, z, t) in natural units c = hbar = 1.
struct SpaceTimePoint {
    double x = 0, y = 0, z = 0, t = 0;

    Vec3 spatial() const { return {x, y, z}; }
    double r2() const { return x * x + y * y + z * z; }
    double rho2() const { return x * x + y * y; }
};

enum class BispinorKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline const char* kind_name(BispinorKind k) {
    switch (k) {
        case BispinorKind::PsiPlus: return "psi+";
        case BispinorKind::PsiMinus: return "psi-";
        case BispinorKind::PhiPlus: return "phi+";
        case BispinorKind::PhiMinus: return "phi-";
    }
    return "?";
}

// Physical configuration of a packet: mass m, size a, winding l, boost v
// along z. The Compton wavelength 1/m is derived, not stored.
struct PacketParams {
    int l = 0;
    double a = 1.0;
    double m = 1.0;
    double v = 0.0;

    void validate() const {
        if (!(m > 0)) throw DomainError("PacketParams: m must be > 0");
        if (!(a > 0)) throw DomainError("PacketParams: a must be > 0");
        if (l < 0) throw DomainError("PacketParams: l must be >= 0");
        if (!(std::abs(v) < 1)) throw DomainError("PacketParams: |v| must be < 1");
    }
    double gamma() const { return 1.0 / std::sqrt(1.0 - v * v); }
    double lambda_bar() const { return 1.0 / m; }
};

using Bispinor = std::array<cplx, 4>;

struct FourCurrent {
    double j0 = 0, jx = 0, jy = 0, jz = 0;

    Vec3 spatial() const { return {jx, jy, jz}; }
};

}  // namespace hopfion
