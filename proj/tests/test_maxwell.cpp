#include <doctest.h>

#include <cmath>
#include <random>

#include "hopfion/maxwell.hpp"
#include "hopfion/topology.hpp"
#include "hopfion/types.hpp"

using namespace hopfion;

namespace {

constexpr cplx I{0, 1};

SpaceTimePoint rand_point(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> box(-2.0, 2.0), tbox(-1.0, 1.0);
    const double x = box(eng), y = box(eng), z = box(eng), t = tbox(eng);
    return {x, y, z, t};
}

}  // namespace

TEST_CASE("origin of the fundamental knot") {
    const auto F = rs_vector({0, 0, 0, 0}, 0, 1.0);
    CHECK(std::abs(F[0] - cplx{-1, 0}) < 1e-15);
    CHECK(std::abs(F[1] - cplx{0, 1}) < 1e-15);
    CHECK(std::abs(F[2]) == 0.0);

    const DerivedEM em = derived_em(F);
    CHECK(em.u == doctest::Approx(2.0));
    CHECK(em.v.x == doctest::Approx(0.0));
    CHECK(em.v.y == doctest::Approx(0.0));
    CHECK(em.v.z == doctest::Approx(-1.0));
    CHECK(velocity_maxwell({0, 0, 0, 0}, 1.0).z == doctest::Approx(-1.0));
}

TEST_CASE("on-axis closed form") {
    // x - iy = 0 kills the winding factor; for l = 0 the components collapse
    // to tau^2 (1, -i, 0) / sigma^3.
    const double z = 0.7, t = 0.3, a = 1.2;
    const cplx tau{t - z, a};
    const cplx sigma = z * z + (a - I * t) * (a - I * t);
    const cplx pref = tau * tau / (sigma * sigma * sigma);
    const auto F = rs_vector({0, 0, z, t}, 0, a);
    CHECK(std::abs(F[0] - pref) < 1e-15 * std::abs(pref));
    CHECK(std::abs(F[1] + I * pref) < 1e-15 * std::abs(pref));
    CHECK(std::abs(F[2]) == 0.0);

    // Higher windings vanish on the axis.
    const auto F1 = rs_vector({0, 0, z, t}, 1, a);
    CHECK(std::abs(F1[0]) == 0.0);
    CHECK(std::abs(F1[1]) == 0.0);
    CHECK(std::abs(F1[2]) == 0.0);
}

TEST_CASE("field is null everywhere") {
    std::mt19937_64 eng(53);
    for (int l : {0, 1, 2})
        for (int i = 0; i < 40; ++i)
            CHECK(null_violation(rand_point(eng), l, 1.0) < 1e-13);
}

TEST_CASE("derived real fields") {
    std::mt19937_64 eng(59);
    for (int i = 0; i < 25; ++i) {
        const SpaceTimePoint p = rand_point(eng);
        const auto F = rs_vector(p, 1, 0.8);
        const DerivedEM em = derived_em(F);

        // E = sqrt2 Re F, B = sqrt2 Im F; null => E.B = 0 and E^2 = B^2.
        CHECK(em.E.x == doctest::Approx(std::sqrt(2.0) * F[0].real()).epsilon(1e-14));
        CHECK(em.B.z == doctest::Approx(std::sqrt(2.0) * F[2].imag()).epsilon(1e-14));
        const double scale = em.E.norm2() + em.B.norm2() + 1e-300;
        CHECK(std::abs(em.E.dot(em.B)) / scale < 1e-12);
        CHECK(std::abs(em.E.norm2() - em.B.norm2()) / scale < 1e-12);

        // u = (E^2 + B^2)/2 and P = E x B.
        CHECK(em.u == doctest::Approx(0.5 * (em.E.norm2() + em.B.norm2())).epsilon(1e-12));
        const Vec3 exb = em.E.cross(em.B);
        CHECK(em.P.x == doctest::Approx(exb.x).epsilon(1e-11));
        CHECK(em.P.y == doctest::Approx(exb.y).epsilon(1e-11));
        CHECK(em.P.z == doctest::Approx(exb.z).epsilon(1e-11));
    }
}

TEST_CASE("transport velocity is unit and independent of winding") {
    std::mt19937_64 eng(61);
    for (int i = 0; i < 30; ++i) {
        const SpaceTimePoint p = rand_point(eng);
        const Vec3 vm = velocity_maxwell(p, 1.0);
        CHECK(std::abs(vm.norm() - 1.0) < 1e-12);
        for (int l : {0, 1, 2}) {
            if (p.rho2() < 1e-8) continue;  // winding factor vanishes on the axis
            const Vec3 vd = derived_em(rs_vector(p, l, 1.0)).v;
            CHECK((vd - vm).norm() < 1e-10);
        }
    }
}

TEST_CASE("field equations hold") {
    std::mt19937_64 eng(67);
    for (int l : {0, 1, 2})
        for (int i = 0; i < 6; ++i)
            CHECK(maxwell_residual(rand_point(eng), l, 1.0) < 1e-7);
}

TEST_CASE("rotation about z") {
    const double phi = 0.61;
    const double c = std::cos(phi), s = std::sin(phi);
    std::mt19937_64 eng(71);
    for (int i = 0; i < 10; ++i) {
        const SpaceTimePoint p = rand_point(eng);
        const SpaceTimePoint q{c * p.x - s * p.y, s * p.x + c * p.y, p.z, p.t};
        // Energy density is axisymmetric; the velocity field co-rotates.
        const DerivedEM ep = derived_em(rs_vector(p, 1, 1.0));
        const DerivedEM eq = derived_em(rs_vector(q, 1, 1.0));
        CHECK(eq.u == doctest::Approx(ep.u).epsilon(1e-11));
        const Vec3 vp = velocity_maxwell(p, 1.0), vq = velocity_maxwell(q, 1.0);
        CHECK(vq.x == doctest::Approx(c * vp.x - s * vp.y).epsilon(1e-11));
        CHECK(vq.y == doctest::Approx(s * vp.x + c * vp.y).epsilon(1e-11));
        CHECK(vq.z == doctest::Approx(vp.z).epsilon(1e-11));
    }
}

TEST_CASE("degenerate and invalid inputs") {
    CHECK_THROWS_AS(rs_vector({0, 0, 0, 0}, -1, 1.0), DomainError);
    CHECK_THROWS_AS(rs_vector({0, 0, 0, 0}, 0, 0.0), DomainError);
    // Every component vanishes on the axis for l >= 1: no transport direction.
    CHECK_THROWS_AS(derived_em(rs_vector({0, 0, 0.5, 0.2}, 1, 1.0)), DegenerateError);
}
