#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hopfion/dirac.hpp"
#include "hopfion/topology.hpp"
#include "hopfion/types.hpp"

using namespace hopfion;

namespace {

std::vector<Vec3> circle(int n, double r, const Vec3& center, int axis, bool reversed = false) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double th = 2 * pi * i / n * (reversed ? -1 : 1);
        Vec3 p = center;
        if (axis == 2) {  // circle in the xy plane
            p.x += r * std::cos(th);
            p.y += r * std::sin(th);
        } else {  // circle in the xz plane
            p.x += r * std::cos(th);
            p.z += r * std::sin(th);
        }
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

TEST_CASE("dirac velocity is the current direction") {
    std::mt19937_64 eng(73);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    for (int l : {0, 1}) {
        for (double v : {0.0, 0.5}) {
            const PacketParams pp{l, 1.0, 1.0, v};
            for (int i = 0; i < 10; ++i) {
                const SpaceTimePoint p{box(eng), box(eng), box(eng), 0.5 * box(eng)};
                const FourCurrent j = four_current_raw(BispinorKind::PsiPlus, p, pp);
                const Vec3 want = j.spatial() / j.j0;
                const Vec3 got = velocity_dirac(p, pp);
                CHECK((got - want).norm() < 1e-10 * (1 + want.norm()));
            }
        }
    }
}

TEST_CASE("speeds: light for the field, below light for the electron") {
    std::mt19937_64 eng(79);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int i = 0; i < 40; ++i) {
        const SpaceTimePoint p{box(eng), box(eng), box(eng), 0.5 * box(eng)};
        CHECK(std::abs(velocity_maxwell(p, 1.0).norm() - 1.0) < 1e-12);
        const double vd = velocity_dirac(p, {1, 1.0, 1.0, 0.0}).norm();
        CHECK(vd < 1.0);
    }
}

TEST_CASE("massive flow approaches the massless one as m shrinks") {
    const SpaceTimePoint pts[] = {{0.5, 0.2, -0.3, 0.0},
                                  {1.2, -0.7, 0.4, 0.3},
                                  {-0.8, 0.9, 1.1, -0.4}};
    for (const auto& p : pts) {
        const Vec3 vm = velocity_maxwell(p, 1.0);
        double prev = 1e300;
        for (double m : {2.0, 1.0, 0.5, 0.25, 0.125}) {
            const double gap = (velocity_dirac(p, {0, 1.0, m, 0.0}) - vm).norm();
            CHECK(gap < prev);
            prev = gap;
        }
    }
}

TEST_CASE("stereographic images coincide with the closed form") {
    std::mt19937_64 eng(83);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int i = 0; i < 30; ++i) {
        const SpaceTimePoint p{box(eng), box(eng), box(eng), 0.5 * box(eng)};
        const cplx want = upsilon_closed(p, 1.0);
        const auto um = hopf_map(velocity_maxwell(p, 1.0));
        REQUIRE_FALSE(um.infinite);
        CHECK(std::abs(um.value - want) < 1e-10 * (1 + std::abs(want)));
        const auto ud = hopf_map(velocity_dirac(p, {1, 1.0, 1.0, 0.0}));
        REQUIRE_FALSE(ud.infinite);
        CHECK(std::abs(ud.value - want) < 1e-10 * (1 + std::abs(want)));
    }
}

TEST_CASE("level lines of the hopf image") {
    // upsilon = i at t = 0, a = 1 runs along (x, y) = (1, -z).
    for (double z : {-1.0, 0.0, 0.7}) {
        const Vec3 p = hopf_level_line({0, 1}, z, 0.0, 1.0);
        CHECK(p.x == doctest::Approx(1.0));
        CHECK(p.y == doctest::Approx(-z));
        CHECK(p.z == doctest::Approx(z));
    }
    // Round trip through the field itself at several levels and times.
    for (cplx u : {cplx{0.5, -0.3}, cplx{2, 1}, cplx{-1.2, 0.7}}) {
        for (double t : {0.0, 0.4}) {
            for (double z : {-1.0, 0.3}) {
                const Vec3 r = hopf_level_line(u, z, t, 1.0);
                const SpaceTimePoint q{r.x, r.y, r.z, t};
                CHECK(std::abs(upsilon_closed(q, 1.0) - u) < 1e-12 * (1 + std::abs(u)));
                const auto um = hopf_map(velocity_maxwell(q, 1.0));
                CHECK(std::abs(um.value - u) < 1e-10 * (1 + std::abs(u)));
            }
        }
    }
}

TEST_CASE("maxwell ring closes to ode accuracy") {
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    const auto tr = trace_line(TraceSource::VelocityMaxwell, {1, 0, 0}, 20.0, pp);
    CHECK_FALSE(tr.aborted);
    // Floor is the chord sagitta of the sampled polygon (~h^2/8R), not the
    // integrator tolerance.
    CHECK(closure_metric(tr) < 1e-3);
}

TEST_CASE("dirac trace stays bounded and refuses to close") {
    const PacketParams pp{1, 1.0, 1.0, 0.0};
    const auto tr = trace_line(TraceSource::CurrentJPlus, {1.2, 0, 0.3}, 30.0, pp);
    for (const Vec3& p : tr.points) CHECK(p.norm() < 10.0);

    const auto vtr = trace_line(TraceSource::VelocityDirac, {1, 0, 0}, 20.0, pp);
    const auto mtr = trace_line(TraceSource::VelocityMaxwell, {1, 0, 0}, 20.0, pp);
    CHECK(closure_metric(vtr) > 10 * closure_metric(mtr));
}

TEST_CASE("closure metric on synthetic polylines") {
    // Exact circle: the return distance is zero.
    StreamlineTrace ring;
    ring.seed = {1, 0, 0};
    for (int i = 0; i <= 256; ++i) {
        const double th = 2 * pi * i / 256;
        ring.points.push_back({std::cos(th), std::sin(th), 0});
        ring.lambdas.push_back(th);
    }
    CHECK(closure_metric(ring) < 1e-12);

    // Helix, radius 1, pitch 0.1: misses its seed by the pitch each turn.
    StreamlineTrace helix;
    helix.seed = {1, 0, 0};
    for (int i = 0; i <= 1024; ++i) {
        const double th = 4 * pi * i / 1024;
        helix.points.push_back({std::cos(th), std::sin(th), 0.1 * th / (2 * pi)});
        helix.lambdas.push_back(th);
    }
    const double cm = closure_metric(helix);
    CHECK(cm == doctest::Approx(0.1 / helix.diameter()).epsilon(0.05));

    // A trace pinned at a field zero never leaves its seed and is rejected.
    StreamlineTrace stuck;
    stuck.seed = {1, 0, 0};
    for (int i = 0; i <= 32; ++i) {
        stuck.points.push_back({1, 0, 0});
        stuck.lambdas.push_back(0.01 * i);
    }
    CHECK_THROWS_AS(closure_metric(stuck), DegenerateError);

    // A jittering near-seed walk is not a throw, just a plainly open verdict:
    // the departure ball scales with the walk's own excursion.
    StreamlineTrace jitter;
    jitter.seed = {1, 0, 0};
    for (int i = 0; i <= 32; ++i) {
        jitter.points.push_back({1 + 0.001 * std::sin(i * 0.2), 0.001 * i, 0});
        jitter.lambdas.push_back(0.01 * i);
    }
    CHECK(closure_metric(jitter) > 0.1);
}

TEST_CASE("one period is extracted from a long trace") {
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    const auto tr = trace_line(TraceSource::VelocityMaxwell, {1, 0, 0}, 20.0, pp);
    const auto loop = extract_closed_loop(tr);
    REQUIRE(loop.size() >= 8);
    CHECK(loop.size() < tr.points.size());
    CHECK((loop.front() - loop.back()).norm() < 0.05 * tr.diameter());
}

TEST_CASE("gauss linking of canonical circles") {
    const auto c1 = circle(256, 1.0, {0, 0, 0}, 2);
    const auto c2 = circle(256, 1.0, {1, 0, 0}, 0);
    const double lk = linking_number(c1, c2);
    CHECK(std::abs(std::abs(lk) - 1.0) < 0.01);

    // Orientation reversal flips the sign.
    const auto c2r = circle(256, 1.0, {1, 0, 0}, 0, true);
    CHECK(linking_number(c1, c2r) == doctest::Approx(-lk).epsilon(1e-6));

    // Distant curves are unlinked.
    const auto far = circle(64, 1.0, {0, 0, 10}, 0);
    CHECK(std::abs(linking_number(c1, far)) < 1e-3);
}

TEST_CASE("linking refuses intersecting or trivial input") {
    const auto c1 = circle(128, 1.0, {0, 0, 0}, 2);
    const auto touching = circle(128, 1.0, {1.0, 0, 0}, 2);  // crosses c1
    CHECK_THROWS_AS(linking_number(c1, touching, 1e-3), DomainError);
    CHECK_THROWS_AS(linking_number({{0, 0, 0}, {1, 0, 0}}, c1), DomainError);
}

TEST_CASE("linked field lines of the electromagnetic knot") {
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    const auto t1 = trace_line(TraceSource::VelocityMaxwell, {1, 0, 0}, 20.0, pp);
    const auto t2 = trace_line(TraceSource::VelocityMaxwell, {1.5, 0, 0}, 25.0, pp);
    const auto l1 = extract_closed_loop(t1);
    const auto l2 = extract_closed_loop(t2);
    const double lk = linking_number(l1, l2, 1e-4);
    CHECK(std::abs(std::abs(lk) - 1.0) < 0.05);
}
