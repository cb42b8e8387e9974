#include "hopfion/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "hopfion/dirac.hpp"
#include "hopfion/dynamics.hpp"
#include "hopfion/gridio.hpp"
#include "hopfion/kg.hpp"
#include "hopfion/maxwell.hpp"
#include "hopfion/topology.hpp"

namespace hopfion {
namespace {

constexpr BispinorKind kKinds[4] = {BispinorKind::PsiPlus, BispinorKind::PsiMinus,
                                    BispinorKind::PhiPlus, BispinorKind::PhiMinus};
constexpr double kBoosts[3] = {0, 0.5, 0.99};

double thr(const VerifyOptions& o, double def) {
    return o.tol_override > 0 ? o.tol_override : def;
}

CheckResult check_le(std::string name, double value, double threshold) {
    return {std::move(name), value <= threshold, value, threshold, "<="};
}

CheckResult check_lt0(std::string name, double value) {
    return {std::move(name), value < 0, value, 0, "< 0 (strict)"};
}

CheckResult check_gt(std::string name, double value, double threshold) {
    return {std::move(name), value > threshold, value, threshold, ">"};
}

CheckResult check_report(std::string name, double value, std::string note) {
    return {std::move(name), true, value, 0, std::move(note)};
}

std::mt19937_64 engine_for(const VerifyOptions& o, int criterion, int combo) {
    return std::mt19937_64(o.rng_seed ^
                           (0x9e3779b97f4a7c15ULL * std::uint64_t(criterion * 1024 + combo + 1)));
}

SpaceTimePoint random_point(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> box(-2.0, 2.0), tbox(-1.0, 1.0);
    const double x = box(eng), y = box(eng), z = box(eng), t = tbox(eng);
    return {x, y, z, t};
}

template <class F>
void parallel_for(std::size_t n, int workers, F&& f) {
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int k = int(std::min<std::size_t>(std::size_t(workers), n));
    for (int w = 0; w < k; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

std::string vlabel(double v) { return "v" + format_double(v); }
std::string alabel(double a) { return "a" + format_double(a); }
std::string llabel(int l) { return "l" + std::to_string(l); }

// --- criterion 1: PDE residuals ---------------------------------------------

std::vector<CheckResult> c1(const VerifyOptions& o) {
    const int npts = o.quick ? 5 : 30;
    const int nmax = o.quick ? 4 : 10;
    const double lim = thr(o, 1e-6);

    struct Combo {
        int kind;  // 0..3 = Dirac kinds, -1 = scalar, -2 = electromagnetic
        int l;
        double v;
    };
    std::vector<Combo> combos;
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 3; ++l)
            for (double v : kBoosts) combos.push_back({k, l, v});
    for (int l = 0; l < 4; ++l)  // scalar orders reach l+1 through Phi kinds
        for (double v : kBoosts) combos.push_back({-1, l, v});
    for (int l = 0; l < 3; ++l) combos.push_back({-2, l, 0});

    std::vector<CheckResult> out(combos.size());
    parallel_for(combos.size(), o.workers, [&](std::size_t i) {
        auto eng = engine_for(o, 1, int(i));
        const Combo c = combos[i];
        double worst = 0;
        if (c.kind >= 0) {
            const PacketParams pp{c.l, 1.0, 1.0, c.v};
            for (int p = 0; p < npts; ++p)
                worst = std::max(worst, dirac_residual(kKinds[c.kind], random_point(eng), pp));
            out[i] = check_le("c1/dirac/" + std::string(kind_name(kKinds[c.kind])) + "/" +
                                  llabel(c.l) + "/" + vlabel(c.v),
                              worst, lim);
        } else if (c.kind == -1) {
            const PacketParams pp{c.l, 1.0, 1.0, c.v};
            for (int p = 0; p < npts; ++p)
                worst = std::max(worst, kg_residual(random_point(eng), pp));
            out[i] = check_le("c1/kg/" + llabel(c.l) + "/" + vlabel(c.v), worst, lim);
        } else {
            for (int p = 0; p < nmax; ++p)
                worst = std::max(worst, maxwell_residual(random_point(eng), c.l, 1.0));
            out[i] = check_le("c1/maxwell/" + llabel(c.l), worst, lim);
        }
    });
    return out;
}

// --- criterion 2: three-way normalization -----------------------------------

std::vector<CheckResult> c2(const VerifyOptions& o) {
    struct Combo {
        BispinorKind kind;
        int l;
        double a;
    };
    std::vector<Combo> combos = {
        {BispinorKind::PsiPlus, 0, 1},  {BispinorKind::PsiPlus, 1, 1},
        {BispinorKind::PsiPlus, 2, 1},  {BispinorKind::PsiMinus, 0, 0.5},
        {BispinorKind::PsiMinus, 0, 2}, {BispinorKind::PhiPlus, 0, 1},
        {BispinorKind::PhiPlus, 1, 1},  {BispinorKind::PhiMinus, 0, 1},
        {BispinorKind::PsiPlus, 0, 5},
    };
    if (o.quick)
        combos = {{BispinorKind::PsiPlus, 0, 1},
                  {BispinorKind::PsiMinus, 0, 2},
                  {BispinorKind::PhiPlus, 0, 1}};
    const double lim = thr(o, 1e-6);

    std::vector<CheckResult> out(2 * combos.size());
    parallel_for(combos.size(), o.workers, [&](std::size_t i) {
        const Combo c = combos[i];
        const PacketParams pp{c.l, c.a, 1.0, 0.0};
        const std::string tag = std::string(kind_name(c.kind)) + "/" + llabel(c.l) + "/" +
                                alabel(c.a);
        const double space = norm_integral(c.kind, pp);
        const double mom = momentum_total(c.kind, pp);
        out[2 * i] = check_le("c2/space/" + tag, std::abs(space - 1), lim);
        out[2 * i + 1] = check_le("c2/momentum/" + tag, std::abs(mom - 1), lim);
    });
    return out;
}

// --- criterion 3: angular momentum ------------------------------------------

std::vector<CheckResult> c3(const VerifyOptions& o) {
    const double lim = thr(o, 1e-6);
    const std::vector<SpaceTimePoint> pts = o.quick
        ? std::vector<SpaceTimePoint>{{0.7, -0.4, 0.3, 0.2}}
        : std::vector<SpaceTimePoint>{{0.7, -0.4, 0.3, 0.2}, {-0.5, 0.8, -0.6, 0.1}};

    std::vector<CheckResult> out;
    for (BispinorKind kind : {BispinorKind::PsiPlus, BispinorKind::PsiMinus})
        for (int l = 0; l < 3; ++l) {
            const PacketParams pp{l, 1.0, 1.0, 0.0};
            const double want = l + 0.5;
            double worst = 0, worst_rot = 0;
            for (const auto& p : pts) {
                worst = std::max(worst, std::abs(mz_check(kind, p, pp) - cplx{want, 0}));
                worst_rot =
                    std::max(worst_rot, std::abs(mz_check_rotated(kind, p, pp) + cplx{want, 0}));
            }
            const std::string tag = std::string(kind_name(kind)) + "/" + llabel(l);
            out.push_back(check_le("c3/mz/" + tag, worst, lim));
            out.push_back(check_le("c3/mz_flip/" + tag, worst_rot, lim));
        }

    for (BispinorKind kind : {BispinorKind::PhiPlus, BispinorKind::PhiMinus})
        for (int l = 0; l < 2; ++l) {
            const PacketParams pp{l, 1.0, 1.0, 0.0};
            const double measured = mz_check(kind, pts[0], pp).real();
            out.push_back(check_report(
                "c3/mz_measured/" + std::string(kind_name(kind)) + "/" + llabel(l), measured,
                "reported measured m_z"));
        }
    return out;
}

// --- criterion 4: Hopf map identity -----------------------------------------

std::vector<CheckResult> c4(const VerifyOptions& o) {
    const int n = o.quick ? 20 : 100;
    const double lim = thr(o, 1e-10);
    auto eng = engine_for(o, 4, 0);
    double worst_m = 0, worst_d = 0;
    for (int i = 0; i < n; ++i) {
        const SpaceTimePoint p = random_point(eng);
        const PacketParams pp{i % 3, 1.0, 1.0, 0.0};
        const cplx uc = upsilon_closed(p, pp.a);
        const Stereographic um = hopf_map(velocity_maxwell(p, pp.a));
        const Stereographic ud = hopf_map(velocity_dirac(p, pp));
        const double scale = 1 + std::abs(uc);
        worst_m = std::max(worst_m, um.infinite ? 1.0 : std::abs(um.value - uc) / scale);
        worst_d = std::max(worst_d, ud.infinite ? 1.0 : std::abs(ud.value - uc) / scale);
    }

    double worst_line = 0;
    const cplx upsilons[] = {{0, 1}, {0.5, -0.3}, {2, 1}, {-1.2, 0.7}};
    for (const cplx& u : upsilons)
        for (double t : {0.0, 0.4})
            for (double z : {-1.0, 0.0, 1.3}) {
                const Vec3 r = hopf_level_line(u, z, t, 1.0);
                const SpaceTimePoint p{r.x, r.y, r.z, t};
                const double scale = 1 + std::abs(u);
                worst_line =
                    std::max(worst_line, std::abs(upsilon_closed(p, 1.0) - u) / scale);
                const Stereographic um = hopf_map(velocity_maxwell(p, 1.0));
                worst_line = std::max(
                    worst_line, um.infinite ? 1.0 : std::abs(um.value - u) / scale);
            }

    return {check_le("c4/upsilon_maxwell", worst_m, lim),
            check_le("c4/upsilon_dirac", worst_d, lim),
            check_le("c4/level_line_roundtrip", worst_line, lim)};
}

// --- criterion 5: null field and speeds -------------------------------------

const std::vector<SpaceTimePoint>& fixed_points10() {
    static const std::vector<SpaceTimePoint> pts = {
        {0.5, 0.2, -0.3, 0},    {1.2, -0.7, 0.4, 0.3},  {-0.8, 0.9, 1.1, -0.4},
        {0.1, 0.1, 0.05, 0.2},  {2.0, 1.0, -1.5, 0.8},  {-1.3, -0.6, 0.7, -0.9},
        {0.9, 1.4, 2.0, 1.2},   {0.33, -0.21, 0.48, 0}, {1.7, 0.2, 0.1, -0.6},
        {-0.4, -1.1, -0.9, 0.5}};
    return pts;
}

std::vector<CheckResult> c5(const VerifyOptions& o) {
    const auto& pts = fixed_points10();
    double worst_null = 0, worst_unit = 0, max_speed = 0, worst_inc = -1e9;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const SpaceTimePoint& p = pts[i];
        for (int l = 0; l < 3; ++l)
            worst_null = std::max(worst_null, null_violation(p, l, 1.0));
        const Vec3 vm = velocity_maxwell(p, 1.0);
        worst_unit = std::max(worst_unit, std::abs(vm.norm() - 1));

        const int l = int(i) % 3;
        double prev = -1;
        for (double m : {2.0, 1.0, 0.5, 0.25, 0.125}) {
            const PacketParams pp{l, 1.0, m, 0.0};
            const Vec3 vd = velocity_dirac(p, pp);
            max_speed = std::max(max_speed, vd.norm());
            const double diff = (vd - vm).norm();
            if (prev >= 0) worst_inc = std::max(worst_inc, diff - prev);
            prev = diff;
        }
    }
    CheckResult sub{"c5/dirac_subluminal", max_speed < 1, max_speed, 1.0, "< 1 (strict)"};
    return {check_le("c5/null_field", worst_null, thr(o, 1e-12)),
            check_le("c5/maxwell_unit_speed", worst_unit, thr(o, 1e-10)), sub,
            check_lt0("c5/massless_limit_monotone", worst_inc)};
}

// --- criterion 6: closure and linking ---------------------------------------

std::vector<CheckResult> c6(const VerifyOptions& o) {
    const PacketParams pp{0, 1.0, 1.0, 0.0};
    const double lim = thr(o, 1e-3);
    std::vector<CheckResult> out;

    const StreamlineTrace ring_m =
        trace_line(TraceSource::VelocityMaxwell, {1.0, 0, 0}, 20.0, pp);
    const double cm_ring = closure_metric(ring_m);
    out.push_back(check_le("c6/maxwell_closure_ring", cm_ring, lim));

    const StreamlineTrace ring_d =
        trace_line(TraceSource::VelocityDirac, {1.0, 0, 0}, 20.0, pp);
    const double cd_ring = closure_metric(ring_d);
    out.push_back(
        check_gt("c6/dirac_open_ring", cd_ring / std::max(cm_ring, 1e-300), 10.0));

    if (!o.quick) {
        const StreamlineTrace outer_m =
            trace_line(TraceSource::VelocityMaxwell, {1.5, 0, 0}, 40.0, pp);
        const double cm_outer = closure_metric(outer_m);
        out.push_back(check_le("c6/maxwell_closure_outer", cm_outer, lim));

        const StreamlineTrace outer_d =
            trace_line(TraceSource::VelocityDirac, {1.5, 0, 0}, 40.0, pp);
        out.push_back(check_gt("c6/dirac_open_outer",
                               closure_metric(outer_d) / std::max(cm_outer, 1e-300), 10.0));

        const auto loop1 = extract_closed_loop(ring_m);
        const auto loop2 = extract_closed_loop(outer_m);
        const double lk = linking_number(loop1, loop2, 1e-4);
        CheckResult link{"c6/linking", std::abs(std::abs(lk) - 1) <= thr(o, 0.05), lk, 1.0,
                         "|Lk| within 0.05 of 1; signed value logged"};
        out.push_back(link);
    }
    return out;
}

// --- criterion 7: conservation and causality --------------------------------

std::vector<CheckResult> c7(const VerifyOptions& o) {
    const int npts = o.quick ? 3 : 10;
    const double lim = thr(o, 1e-6);

    struct Combo {
        int kind;
        int l;
        double v;
    };
    std::vector<Combo> combos;
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 3; ++l)
            for (double v : kBoosts) combos.push_back({k, l, v});

    std::vector<CheckResult> out(2 * combos.size());
    parallel_for(combos.size(), o.workers, [&](std::size_t i) {
        auto eng = engine_for(o, 7, int(i));
        const Combo c = combos[i];
        const PacketParams pp{c.l, 1.0, 1.0, c.v};
        double worst_cons = 0, worst_causal = 1;
        for (int p = 0; p < npts; ++p) {
            const SpaceTimePoint q = random_point(eng);
            worst_cons =
                std::max(worst_cons, current_conservation_residual(kKinds[c.kind], q, pp));
            const FourCurrent j = four_current_raw(kKinds[c.kind], q, pp);
            const double causal =
                (j.j0 * j.j0 - j.spatial().norm2()) / (j.j0 * j.j0 + 1e-300);
            worst_causal = std::min(worst_causal, causal);
        }
        const std::string tag =
            std::string(kind_name(kKinds[c.kind])) + "/" + llabel(c.l) + "/" + vlabel(c.v);
        out[2 * i] = check_le("c7/conservation/" + tag, worst_cons, lim);
        out[2 * i + 1] = CheckResult{"c7/causality/" + tag, worst_causal >= -1e-12,
                                     worst_causal, -1e-12, ">= -1e-12 (roundoff floor)"};
    });
    return out;
}

// --- criterion 8: spreading law ---------------------------------------------

std::vector<CheckResult> c8(const VerifyOptions& o) {
    const std::vector<double> as = {0.5, 1, 2, 5, 10};
    const int lmax = o.quick ? 1 : 3;
    const double lim = thr(o, 1e-4);

    std::vector<CheckResult> out;

    if (o.quick) {
        // Reduced: fit one configuration, take B(a) from the momentum side.
        const SpreadingFit fit = spreading_fit(BispinorKind::PsiPlus, {0, 1.0, 1.0, 0.0});
        out.push_back(check_le("c8/fit_residual/l0/a1", fit.residual, lim));
        double prev = 2, worst_inc = -1e9, bmin = 1, bmax = 0;
        for (double a : as) {
            const double b = momentum_b(BispinorKind::PsiPlus, {0, a, 1.0, 0.0});
            bmin = std::min(bmin, b);
            bmax = std::max(bmax, b);
            if (prev <= 1) worst_inc = std::max(worst_inc, b - prev);
            prev = b;
        }
        CheckResult range{"c8/b_range/l0", bmin > 0 && bmax < 1, bmax, 1.0, "B in (0,1)"};
        out.push_back(range);
        out.push_back(check_lt0("c8/b_monotone/l0", worst_inc));
        return out;
    }

    struct Job {
        int l;
        double a;
    };
    std::vector<Job> jobs;
    for (int l = 0; l < lmax; ++l)
        for (double a : as) jobs.push_back({l, a});

    std::vector<SpreadingFit> fits(jobs.size());
    std::vector<CheckResult> fit_checks(jobs.size());
    parallel_for(jobs.size(), o.workers, [&](std::size_t i) {
        const Job j = jobs[i];
        fits[i] = spreading_fit(BispinorKind::PsiPlus, {j.l, j.a, 1.0, 0.0});
        fit_checks[i] = check_le(
            "c8/fit_residual/" + llabel(j.l) + "/" + alabel(j.a), fits[i].residual, lim);
    });
    out.insert(out.end(), fit_checks.begin(), fit_checks.end());

    for (int l = 0; l < lmax; ++l) {
        double prev = 2, worst_inc = -1e9, bmin = 1, bmax = 0;
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (jobs[i].l != l) continue;
            const double b = fits[i].b;
            bmin = std::min(bmin, b);
            bmax = std::max(bmax, b);
            if (prev <= 1) worst_inc = std::max(worst_inc, b - prev);
            prev = b;
        }
        CheckResult range{"c8/b_range/" + llabel(l), bmin > 0 && bmax < 1, bmax, 1.0,
                          "B in (0,1)"};
        out.push_back(range);
        out.push_back(check_lt0("c8/b_monotone/" + llabel(l), worst_inc));
    }
    return out;
}

// --- criterion 9: uncertainty product ---------------------------------------

std::vector<CheckResult> c9(const VerifyOptions& o) {
    const std::vector<double> as = o.quick ? std::vector<double>{1, 10}
                                           : std::vector<double>{0.5, 1, 2, 5, 10};
    std::vector<double> prods(as.size());
    parallel_for(as.size(), o.workers, [&](std::size_t i) {
        prods[i] =
            uncertainty_product(BispinorKind::PsiPlus, {0, as[i], 1.0, 0.0}).product;
    });
    double pmin = 1e9, worst_inc = -1e9;
    for (std::size_t i = 0; i < prods.size(); ++i) {
        pmin = std::min(pmin, prods[i]);
        if (i) worst_inc = std::max(worst_inc, prods[i] - prods[i - 1]);
    }
    std::vector<CheckResult> out;
    out.push_back(check_gt("c9/lower_bound", pmin, 1.5));
    if (!o.quick) out.push_back(check_lt0("c9/monotone", worst_inc));
    out.push_back(check_le("c9/limit_margin_a10", prods.back() / 1.5 - 1, thr(o, 0.05)));
    return out;
}

// --- criterion 10: boost ----------------------------------------------------

std::vector<CheckResult> c10(const VerifyOptions& o) {
    std::vector<CheckResult> out;
    const int n = o.quick ? 61 : 121;
    double prev = 1e9, worst_inc = -1e9, last = 0;
    for (double v : {0.0, 0.9, 0.99}) {
        const ChargeProfile prof = charge_profile(
            BispinorKind::PsiPlus, {0, 1.0, 1.0, v}, 3.0, 3.0, n, n, ProfileMode::Slice, 0);
        const double ratio = prof.z_second_moment / prof.x_second_moment;
        if (prev < 1e8) worst_inc = std::max(worst_inc, ratio - prev);
        prev = ratio;
        last = ratio;
    }
    out.push_back(check_lt0("c10/contraction_monotone", worst_inc));
    out.push_back(check_report("c10/moment_ratio_v0.99", last, "z/x second-moment ratio"));

    const int npts = o.quick ? 2 : 5;
    const double lim = thr(o, 1e-6);
    std::vector<CheckResult> sub(2 * 4);
    parallel_for(4, o.workers, [&](std::size_t k) {
        auto eng = engine_for(o, 10, int(k));
        const PacketParams pp{0, 1.0, 1.0, 0.99};
        double worst_res = 0, worst_cons = 0;
        for (int p = 0; p < npts; ++p) {
            const SpaceTimePoint q = random_point(eng);
            worst_res = std::max(worst_res, dirac_residual(kKinds[k], q, pp));
            worst_cons =
                std::max(worst_cons, current_conservation_residual(kKinds[k], q, pp));
        }
        const std::string tag = std::string(kind_name(kKinds[k])) + "/v0.99";
        sub[2 * k] = check_le("c10/boosted_residual/" + tag, worst_res, lim);
        sub[2 * k + 1] = check_le("c10/boosted_conservation/" + tag, worst_cons, lim);
    });
    out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

// --- criterion 11: determinism ----------------------------------------------

std::vector<CheckResult> c11(const VerifyOptions& o) {
    VerifyOptions sub = o;
    sub.quick = true;
    sub.tol_override = 0;
    auto sub_body = [&] {
        RunReport r;
        for (int c : {4, 5}) {
            auto checks = criterion_checks(c, sub);
            r.checks.insert(r.checks.end(), checks.begin(), checks.end());
        }
        return r.body(sub);
    };
    const std::string b1 = sub_body(), b2 = sub_body();
    CheckResult det{"c11/deterministic_body", b1 == b2, b1 == b2 ? 0.0 : 1.0, 0.0,
                    "repeated fixed-seed sub-run bodies byte-identical"};
    return {det};
}

}  // namespace

std::vector<CheckResult> criterion_checks(int criterion, const VerifyOptions& opt) {
    switch (criterion) {
        case 1: return c1(opt);
        case 2: return c2(opt);
        case 3: return c3(opt);
        case 4: return c4(opt);
        case 5: return c5(opt);
        case 6: return c6(opt);
        case 7: return c7(opt);
        case 8: return c8(opt);
        case 9: return c9(opt);
        case 10: return c10(opt);
        case 11: return c11(opt);
    }
    throw DomainError("criterion_checks: criterion must be 1..11");
}

const char* criterion_label(int criterion) {
    switch (criterion) {
        case 1: return "PDE residuals (scalar, Dirac, electromagnetic)";
        case 2: return "three-way normalization";
        case 3: return "angular momentum m_z";
        case 4: return "Hopf map identity and level lines";
        case 5: return "null field, unit and subluminal speeds";
        case 6: return "fiber closure and linking";
        case 7: return "current conservation and causality";
        case 8: return "spreading law";
        case 9: return "uncertainty product";
        case 10: return "boosted states and contraction";
        case 11: return "report determinism";
    }
    return "unknown";
}

int RunReport::failed_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.passed) ++n;
    return n;
}

bool RunReport::all_passed() const { return failed_count() == 0; }

std::string RunReport::body(const VerifyOptions& opt) const {
    std::ostringstream os;
    os << "hopfion verify report\n";
    os << "mode=" << (opt.quick ? "quick" : "full") << "\n";
    os << "seed=" << opt.rng_seed << "\n";
    os << "tol=" << (opt.tol_override > 0 ? format_double(opt.tol_override) : "default")
       << "\n";
    for (const auto& c : checks) {
        os << "check " << c.name << " " << (c.passed ? "PASS" : "FAIL")
           << " value=" << format_double(c.value)
           << " threshold=" << format_double(c.threshold) << " note=" << c.note << "\n";
    }
    os << "summary passed=" << (checks.size() - std::size_t(failed_count())) << "/"
       << checks.size() << "\n";
    os << "result " << (all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

RunReport run_verify(const VerifyOptions& opt) {
    RunReport report;
    for (int c = 1; c <= 11; ++c) {
        auto checks = criterion_checks(c, opt);
        report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    }
    return report;
}

}  // namespace hopfion
