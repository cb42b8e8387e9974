#include <doctest.h>

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "hopfion/gridio.hpp"
#include "hopfion/types.hpp"

using namespace hopfion;

TEST_CASE("grid parsing") {
    const auto g = GridSpec::parse("x=-2:2:101,y=0,z=0,t=0");
    CHECK(g.x.varying());
    CHECK(g.x.count == 101);
    CHECK(g.x.lo == -2.0);
    CHECK(g.x.hi == 2.0);
    CHECK_FALSE(g.y.varying());
    CHECK(g.total() == 101);
    const auto vary = g.varying_axes();
    REQUIRE(vary.size() == 1);
    CHECK(vary[0] == 'x');

    const auto vals = g.x.values();
    REQUIRE(vals.size() == 101);
    CHECK(vals.front() == -2.0);
    CHECK(vals.back() == 2.0);
    CHECK(vals[50] == doctest::Approx(0.0));

    // Unmentioned axes stay fixed at zero.
    const auto h = GridSpec::parse("z=-1:1:5");
    CHECK(h.x.lo == 0.0);
    CHECK_FALSE(h.x.varying());
    CHECK(h.total() == 5);

    const auto two = GridSpec::parse("x=0:1:3,t=0.5:1.5:4");
    CHECK(two.total() == 12);
    const auto v2 = two.varying_axes();
    REQUIRE(v2.size() == 2);
    CHECK(v2[0] == 'x');
    CHECK(v2[1] == 't');
}

TEST_CASE("grid rejections") {
    CHECK_THROWS_AS(GridSpec::parse("w=0"), DomainError);
    CHECK_THROWS_AS(GridSpec::parse("x=0,x=1"), DomainError);
    CHECK_THROWS_AS(GridSpec::parse("x=0:1:1"), DomainError);
    CHECK_THROWS_AS(GridSpec::parse("x=1:1:5"), DomainError);
    CHECK_THROWS_AS(GridSpec::parse("x=0:1:20000001"), DomainError);
    CHECK_THROWS_AS(GridSpec::parse("x=a:b:5"), DomainError);
    CHECK_THROWS_AS(GridSpec::parse(""), DomainError);
}

TEST_CASE("seed list parsing") {
    const auto seeds = parse_seeds("1,0,0;0,1.5,-2");
    REQUIRE(seeds.size() == 2);
    CHECK(seeds[0].x == 1.0);
    CHECK(seeds[1].y == 1.5);
    CHECK(seeds[1].z == -2.0);
    CHECK_THROWS_AS(parse_seeds("1,0"), DomainError);
    CHECK_THROWS_AS(parse_seeds(""), DomainError);
}

TEST_CASE("shortest round-trip double formatting") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-1.0) == "-1");
    CHECK(format_double(0.0) == "0");

    std::mt19937_64 eng(89);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 200; ++i) {
        const double v = std::ldexp(u(eng), int(eng() % 40) - 20);
        const std::string s = format_double(v);
        double back = 0;
        const auto ec = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(ec.ec == std::errc{});
        CHECK(back == v);
    }
}

TEST_CASE("plane sample of a velocity field carries in-plane components") {
    const auto g = GridSpec::parse("x=-2:2:101,y=-2:2:101,z=0,t=0");
    const auto t = sample_table("v_maxwell", g, BispinorKind::PsiPlus,
                                {0, 1.0, 1.0, 0.0}, 2);
    REQUIRE(t.columns.size() == 4);
    CHECK(t.columns[0] == "x");
    CHECK(t.columns[1] == "y");
    CHECK(t.columns[2] == "vx");
    CHECK(t.columns[3] == "vy");
    CHECK(t.coord_count == 2);
    REQUIRE(t.rows.size() == 10201);
    // Later axis fastest: the first two rows share x and step y.
    CHECK(t.rows[0][0] == t.rows[1][0]);
    CHECK(t.rows[0][1] < t.rows[1][1]);
    CHECK(t.rows[0][0] == -2.0);
    CHECK(t.rows[101][0] > -2.0);
}

TEST_CASE("selector column sets") {
    const auto g = GridSpec::parse("x=-1:1:5");
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    CHECK(sample_table("f_l", g, BispinorKind::PsiPlus, pp).columns ==
          std::vector<std::string>{"x", "re", "im"});
    CHECK(sample_table("j_mu", g, BispinorKind::PsiPlus, pp).columns ==
          std::vector<std::string>{"x", "j0", "jx", "jy", "jz"});
    CHECK(sample_table("rs_vector", g, BispinorKind::PsiPlus, pp).columns.size() == 7);
    CHECK(sample_table("upsilon", g, BispinorKind::PsiPlus, pp).columns ==
          std::vector<std::string>{"x", "re", "im", "at_infinity"});
    CHECK_THROWS_AS(sample_table("nonsense", g, BispinorKind::PsiPlus, pp), DomainError);
}

TEST_CASE("charge profile selector needs its plane") {
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    const auto good = GridSpec::parse("x=-2:2:9,z=-2:2:9");
    CHECK(sample_table("charge_profile", good, BispinorKind::PsiPlus, pp).rows.size() ==
          81);
    const auto bad = GridSpec::parse("x=-2:2:9,y=-1:1:3,z=-2:2:9");
    CHECK_THROWS_AS(sample_table("charge_profile", bad, BispinorKind::PsiPlus, pp),
                    DomainError);
}

TEST_CASE("results are independent of the worker count") {
    const auto g = GridSpec::parse("x=-1.5:1.5:13,z=-1:1:7");
    const PacketParams pp{1, 1.0, 1.0, 0.0};
    const auto a = sample_table("j_mu", g, BispinorKind::PhiPlus, pp, 1);
    const auto b = sample_table("j_mu", g, BispinorKind::PhiPlus, pp, 8);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t c = 0; c < a.rows[i].size(); ++c)
            CHECK(a.rows[i][c] == b.rows[i][c]);
}

TEST_CASE("writers are byte-deterministic") {
    const auto g = GridSpec::parse("x=-1:1:9,y=-1:1:9");
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    const auto t = sample_table("v_maxwell", g, BispinorKind::PsiPlus, pp);
    SampleMeta meta;
    meta.selector = "v_maxwell";
    meta.kind_label = "psi+";
    meta.params = pp;
    meta.grid = "x=-1:1:9,y=-1:1:9";

    std::ostringstream c1, c2, j1, j2;
    write_sample_csv(c1, t, meta);
    write_sample_csv(c2, t, meta);
    write_sample_json(j1, t, meta);
    write_sample_json(j2, t, meta);
    CHECK(c1.str() == c2.str());
    CHECK(j1.str() == j2.str());
    CHECK(c1.str().rfind("# hopfion-sample v1", 0) == 0);
    CHECK(c1.str().find("x,y,vx,vy") != std::string::npos);
    CHECK(j1.str().find("\"format\"") != std::string::npos);
}

TEST_CASE("trace writer shape") {
    StreamlineTrace tr;
    tr.seed = {1, 0, 0};
    tr.points = {{1, 0, 0}, {0.9, 0.1, 0}, {0.8, 0.2, 0}};
    tr.lambdas = {0, 0.15, 0.3};
    TraceMeta meta;
    meta.source = "velocity_maxwell";
    meta.params = {0, 1.0, 1.0, 0.0};
    meta.seed = tr.seed;
    meta.lambda_max = 0.3;

    std::ostringstream os;
    write_trace_csv(os, tr, meta);
    const std::string s = os.str();
    CHECK(s.rfind("# hopfion-trace v1", 0) == 0);
    CHECK(s.find("lambda,x,y,z") != std::string::npos);
    CHECK(s.find("0.15,0.9,0.1,0") != std::string::npos);
}
