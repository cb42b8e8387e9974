#include <doctest.h>

#include <cmath>

#include "hopfion/dirac.hpp"
#include "hopfion/dynamics.hpp"
#include "hopfion/types.hpp"

using namespace hopfion;

TEST_CASE("momentum density normalizes to one") {
    for (BispinorKind k : {BispinorKind::PsiPlus, BispinorKind::PsiMinus,
                           BispinorKind::PhiPlus, BispinorKind::PhiMinus}) {
        for (int l : {0, 1}) {
            CHECK(momentum_total(k, {l, 1.0, 1.0, 0.0}) ==
                  doctest::Approx(1.0).epsilon(1e-8));
        }
    }
    CHECK(momentum_total(BispinorKind::PsiPlus, {0, 2.5, 0.7, 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("momentum density pointwise form") {
    const PacketParams pp{1, 1.0, 1.0, 0.0};
    const auto n = normalization_constant(BispinorKind::PsiPlus, pp);
    const Vec3 p{0.4, -0.7, 1.1};
    const double E = std::sqrt(1.0 + p.norm2());
    const double want =
        pi * n.N * n.N * (p.x * p.x + p.y * p.y) * std::exp(-2 * pp.a * E);
    CHECK(momentum_density(p, BispinorKind::PsiPlus, pp) ==
          doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("frozen spreading-speed table") {
    // <p^2/E^2> over the packet-size sweep; the values freeze the 1D integral.
    const double b_l0[] = {0.83160130382405877, 0.66310426638336363, 0.46286177679265008,
                           0.24053536320663945, 0.13345520687162067};
    const double b_l1[] = {0.9365738094778504, 0.82671921213979742, 0.64064580401894185,
                           0.36717321004815844, 0.21227725294916421};
    const double as[] = {0.5, 1.0, 2.0, 5.0, 10.0};
    for (int i = 0; i < 5; ++i) {
        CHECK(momentum_b(BispinorKind::PsiPlus, {0, as[i], 1.0, 0.0}) ==
              doctest::Approx(b_l0[i]).epsilon(1e-9));
        CHECK(momentum_b(BispinorKind::PsiPlus, {1, as[i], 1.0, 0.0}) ==
              doctest::Approx(b_l1[i]).epsilon(1e-9));
        if (i > 0) CHECK(b_l0[i] < b_l0[i - 1]);
        CHECK(b_l0[i] > 0);
        CHECK(b_l0[i] < 1);
    }
}

TEST_CASE("second moments of momentum") {
    CHECK(momentum_p2(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}) ==
          doctest::Approx(3.82676160797662).epsilon(1e-9));
    CHECK(std::abs(momentum_pz(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0})) < 1e-10);
}

TEST_CASE("frozen spatial moments") {
    CHECK(spatial_moment(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}) ==
          doctest::Approx(1.07943340819).epsilon(1e-5));
    CHECK(spatial_moment(BispinorKind::PsiPlus, {1, 1.0, 1.0, 0.0}) ==
          doctest::Approx(1.19654182883).epsilon(1e-5));
    CHECK(spatial_moment(BispinorKind::PsiPlus, {0, 2.0, 1.0, 0.0}) ==
          doctest::Approx(2.55500474249).epsilon(1e-5));
}

TEST_CASE("packet spreading follows the quadratic law") {
    const auto fit = spreading_fit(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0});
    CHECK(fit.residual < 1e-4);
    CHECK(fit.b > 0);
    CHECK(fit.b < 1);
    // The fitted rate is the momentum-side <p^2/E^2>.
    CHECK(fit.b == doctest::Approx(momentum_b(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}))
                       .epsilon(1e-4));
    CHECK(fit.r2_0 == doctest::Approx(1.07943340819).epsilon(1e-4));
    REQUIRE(fit.t_samples.size() == fit.r2_values.size());
    REQUIRE(fit.t_samples.size() >= 3);
}

TEST_CASE("uncertainty products over the size sweep") {
    const double want[] = {2.301886, 2.032421, 1.814096, 1.639527, 1.572301};
    const double as[] = {0.5, 1.0, 2.0, 5.0, 10.0};
    double prev = 1e300;
    for (int i = 0; i < 5; ++i) {
        const auto u = uncertainty_product(BispinorKind::PsiPlus, {0, as[i], 1.0, 0.0});
        CHECK(u.product == doctest::Approx(want[i]).epsilon(5e-5));
        CHECK(u.product > 1.5);
        CHECK(u.product < prev);
        CHECK(u.dr == doctest::Approx(std::sqrt(u.r2_mean)).epsilon(1e-12));
        prev = u.product;
    }
    // Widest packet sits within 5% of the bound.
    CHECK(prev / 1.5 - 1.0 < 0.05);
}

TEST_CASE("rest-frame-only quantities reject boosts") {
    CHECK_THROWS_AS(momentum_p2(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(momentum_total(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.5}),
                    DomainError);
}

TEST_CASE("charge profile on the symmetry plane") {
    const auto prof = charge_profile(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}, 3.0, 3.0,
                                     41, 41);
    REQUIRE(prof.x.size() == 41);
    REQUIRE(prof.z.size() == 41);
    REQUIRE(prof.density.size() == 41);
    CHECK(prof.mass > 0);
    // Even in x and in z for the resting packet at t = 0.
    for (int i = 0; i < 41; ++i)
        for (int j = 0; j < 41; ++j) {
            CHECK(prof.density[i][j] ==
                  doctest::Approx(prof.density[40 - i][j]).epsilon(1e-10));
            CHECK(prof.density[i][j] ==
                  doctest::Approx(prof.density[i][40 - j]).epsilon(1e-10));
        }
}

TEST_CASE("marginal profile mass approaches one on a wide grid") {
    const auto prof = charge_profile(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}, 6.0, 6.0,
                                     81, 81, ProfileMode::Integrated);
    CHECK(prof.mass == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("boosted profiles contract along the motion") {
    auto ratio = [](double v) {
        const auto prof = charge_profile(BispinorKind::PsiPlus, {0, 1.0, 1.0, v}, 3.0,
                                         3.0, 61, 61);
        return prof.z_second_moment / prof.x_second_moment;
    };
    const double r0 = ratio(0.0), r9 = ratio(0.9);
    CHECK(r9 < r0);
}

TEST_CASE("profile grid validation") {
    CHECK_THROWS_AS(charge_profile(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}, 3.0, 3.0,
                                   1, 41),
                    DomainError);
    CHECK_THROWS_AS(charge_profile(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0}, -1.0, 3.0,
                                   41, 41),
                    DomainError);
}
