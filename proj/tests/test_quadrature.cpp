#include <doctest.h>

#include <cmath>

#include "hopfion/bessel.hpp"
#include "hopfion/quadrature.hpp"
#include "hopfion/types.hpp"

using namespace hopfion;

TEST_CASE("finite interval basics") {
    auto lin = [](double x) { return x; };
    CHECK(integrate_1d(lin, 0.0, 1.0).value == doctest::Approx(0.5).epsilon(1e-13));

    auto gauss = [](double x) { return std::exp(-x * x); };
    CHECK(integrate_1d(gauss, -8.0, 8.0).value ==
          doctest::Approx(std::sqrt(pi)).epsilon(1e-12));

    // Odd integrand over a symmetric interval.
    auto odd = [](double x) { return x * std::exp(-x * x); };
    CHECK(std::abs(integrate_1d(odd, -6.0, 6.0).value) < 1e-12);
}

TEST_CASE("complex finite interval") {
    auto f = [](double x) { return cplx{std::cos(x), std::sin(x)}; };
    const cplx got = integrate_1d_c(f, 0.0, pi / 2).value;
    CHECK(got.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(got.imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite exponential tails") {
    // int_0^inf p^2 e^{-2 sqrt(1+p^2)} dp = K_2(2)/2.
    auto f = [](double p) { return p * p * std::exp(-2 * std::sqrt(1 + p * p)); };
    CHECK(integrate_semi_inf(f, 0.0).value ==
          doctest::Approx(0.12687987728302793).epsilon(1e-11));

    // Offset lower limit: int_1^inf e^{-x} dx = 1/e.
    auto g = [](double x) { return std::exp(-x); };
    CHECK(integrate_semi_inf(g, 1.0).value ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    // The scale parameter only remaps the variable; result is unchanged.
    CHECK(integrate_semi_inf(f, 0.0, {}, 3.0).value ==
          doctest::Approx(0.12687987728302793).epsilon(1e-10));
}

TEST_CASE("cosh representation of K_0 closes the loop") {
    auto f = [](double t) { return std::exp(-2.0 * std::cosh(t)); };
    CHECK(integrate_semi_inf(f, 0.0).value ==
          doctest::Approx(0.11389387274953344).epsilon(1e-10));
}

TEST_CASE("volume integral in spherical coordinates") {
    // int e^{-2r} d^3r = pi; the integrand is spherically symmetric, which is
    // exactly the shape that exposes a wrong angular Jacobian.
    PacketParams pp{0, 1.0, 1.0, 0.0};
    auto f = [](const Vec3& r) { return std::exp(-2 * r.norm()); };
    CHECK(integrate_3d(f, pp).value == doctest::Approx(pi).epsilon(1e-7));

    // Anisotropic check through the full angular path as well.
    auto g = [](const Vec3& r) { return r.z * r.z * std::exp(-2 * r.norm()); };
    // int r^2 cos^2 th e^{-2r} d^3r = (4pi/3) int r^4 e^{-2r} dr = pi.
    CHECK(integrate_3d(g, pp, ToleranceConfig::quadrature_3d(), false).value ==
          doctest::Approx(pi).epsilon(1e-6));

    // Axisymmetric evaluation agrees with the full azimuthal sweep.
    auto h = [](const Vec3& r) {
        return (r.x * r.x + r.y * r.y + r.z) * std::exp(-r.norm2());
    };
    const double ax = integrate_3d(h, pp).value;
    const double full = integrate_3d(h, pp, ToleranceConfig::quadrature_3d(), false).value;
    CHECK(ax == doctest::Approx(full).epsilon(1e-6));
}

TEST_CASE("tolerance plumbing") {
    ToleranceConfig bad;
    bad.rel_tol = 0;
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate_1d(f, 0.0, 1.0, bad), DomainError);

    ToleranceConfig tiny;
    tiny.max_evals = 4;
    auto wiggle = [](double x) { return std::sin(40 * x); };
    CHECK_THROWS_AS(integrate_1d(wiggle, 0.0, 10.0, tiny), ConvergenceError);
}

TEST_CASE("evaluation counts are reported") {
    auto f = [](double x) { return std::exp(-x * x); };
    const auto res = integrate_1d(f, -5.0, 5.0);
    CHECK(res.evaluations > 0);
    CHECK(res.error_estimate >= 0);
}
