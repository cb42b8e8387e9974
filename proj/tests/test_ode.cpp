#include <doctest.h>

#include <cmath>

#include "hopfion/ode.hpp"
#include "hopfion/types.hpp"

using namespace hopfion;

TEST_CASE("constant field is a straight line") {
    auto field = [](const Vec3&) { return Vec3{1, 0, 0}; };
    const auto tr = ode_trace(field, {0, 2, 0}, 5.0);
    REQUIRE(tr.points.size() >= 2);
    CHECK_FALSE(tr.aborted);
    const Vec3 end = tr.points.back();
    CHECK(end.x == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(end.y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(tr.lambdas.back() == doctest::Approx(5.0));
    CHECK(tr.arc_length() == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("circular field closes to the local tolerance") {
    // dr/dl = (-y, x, 0): exact circles, period 2 pi.
    auto field = [](const Vec3& r) { return Vec3{-r.y, r.x, 0}; };
    OdeControl ctl;
    ctl.rel_tol = 1e-10;
    ctl.abs_tol = 1e-12;
    const auto tr = ode_trace(field, {1, 0, 0}, 2 * pi, ctl);
    const Vec3 end = tr.points.back();
    const double gap = (end - Vec3{1, 0, 0}).norm();
    CHECK(gap < 10 * 2 * pi * 1e-10);

    // Radius is conserved along the way.
    for (const Vec3& p : tr.points)
        CHECK(std::sqrt(p.x * p.x + p.y * p.y) == doctest::Approx(1.0).epsilon(1e-9));

    // Both are chordal estimates over the sampled polygon, so they sit a few
    // parts in 1e4 below the smooth values at max_step 0.1.
    CHECK(tr.diameter() == doctest::Approx(2.0).epsilon(2e-3));
    CHECK(tr.diameter() <= 2.0 + 1e-9);
    CHECK(tr.arc_length() == doctest::Approx(2 * pi).epsilon(1e-3));
    CHECK(tr.arc_length() <= 2 * pi + 1e-9);
}

TEST_CASE("uniform arc-length resampling") {
    auto field = [](const Vec3& r) { return Vec3{-r.y, r.x, 0}; };
    const auto tr = ode_trace(field, {1, 0, 0}, 2 * pi);
    const auto rs = tr.resampled(64);
    REQUIRE(rs.points.size() == 64);
    // Consecutive gaps agree to a few percent on a smooth curve.
    double lo = 1e300, hi = 0;
    for (std::size_t i = 1; i < rs.points.size(); ++i) {
        const double d = (rs.points[i] - rs.points[i - 1]).norm();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    CHECK(hi / lo < 1.05);
}

TEST_CASE("stiff pullback aborts with a partial trace") {
    // Field magnitude collapses toward x = 1, forcing the step under the floor.
    auto field = [](const Vec3& r) {
        const double g = std::max(1.0 - r.x, 0.0);
        return Vec3{g * g * 1e-6 + 1e-300, 0, 0};
    };
    OdeControl ctl;
    ctl.max_steps = 3000;
    const auto tr = ode_trace(field, {0, 0, 0}, 1e9, ctl);
    CHECK(tr.aborted);
    REQUIRE(tr.points.size() >= 2);
    CHECK(tr.points.back().x <= 1.0 + 1e-9);
}

TEST_CASE("helical field keeps its pitch") {
    auto field = [](const Vec3& r) { return Vec3{-r.y, r.x, 0.1}; };
    const auto tr = ode_trace(field, {1, 0, 0}, 2 * pi);
    const Vec3 end = tr.points.back();
    CHECK(end.z == doctest::Approx(0.2 * pi).epsilon(1e-9));
    CHECK(end.x == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(end.y) < 1e-7);
}
