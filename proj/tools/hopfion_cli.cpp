#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfion/dirac.hpp"
#include "hopfion/dynamics.hpp"
#include "hopfion/gridio.hpp"
#include "hopfion/topology.hpp"
#include "hopfion/types.hpp"
#include "hopfion/verify.hpp"

namespace {

using namespace hopfion;

struct CommonOpts {
    int l = 0;
    double a = 1, m = 1, v = 0;
    std::string kind = "psi+";
    double tol = 0;
    int workers = 1;
    std::uint64_t rng_seed = 0;
    bool compton = false;
};

BispinorKind kind_of(const std::string& s) {
    if (s == "psi+") return BispinorKind::PsiPlus;
    if (s == "psi-") return BispinorKind::PsiMinus;
    if (s == "phi+") return BispinorKind::PhiPlus;
    if (s == "phi-") return BispinorKind::PhiMinus;
    throw DomainError("unknown kind '" + s + "' (psi+, psi-, phi+, phi-)");
}

PacketParams params_of(const CommonOpts& o) {
    PacketParams p{o.l, o.a, o.m, o.v};
    p.validate();
    return p;
}

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--l", o.l, "azimuthal winding index (>= 0)");
    sub->add_option("--a", o.a, "packet width parameter (> 0)");
    sub->add_option("--m", o.m, "mass (> 0; natural units)");
    sub->add_option("--v", o.v, "boost velocity along z, |v| < 1");
    sub->add_option("--kind", o.kind, "bispinor kind: psi+, psi-, phi+, phi-");
    sub->add_option("--tol", o.tol, "tolerance override (commands pick their use)");
    sub->add_option("--workers", o.workers, "worker pool size")->check(CLI::Range(1, 256));
    sub->add_option("--rng-seed", o.rng_seed, "random seed for randomized checks");
    sub->add_flag("--compton", o.compton, "print Compton-wavelength conversions");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw DomainError("cannot open output file '" + out_path + "'");
    os << content;
    if (!os) throw DomainError("write failed for '" + out_path + "'");
}

void compton_note(const CommonOpts& o) {
    if (!o.compton) return;
    std::cout << "compton: lambda_bar=" << format_double(1.0 / o.m)
              << " a_in_lambda_bar=" << format_double(o.a * o.m)
              << " (natural units, hbar=c=1)\n";
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- sample -----------------------------------------------------------------

int cmd_sample(const CommonOpts& o, const std::string& selector, const std::string& grid_text,
               const std::string& format, const std::string& out,
               const std::string& profile_mode, bool seed_given) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridSpec grid = GridSpec::parse(grid_text);
    const PacketParams params = params_of(o);
    const ProfileMode mode =
        profile_mode == "integrated" ? ProfileMode::Integrated : ProfileMode::Slice;
    if (!profile_mode.empty() && profile_mode != "integrated" && profile_mode != "slice")
        throw DomainError("unknown profile mode '" + profile_mode + "'");

    const SampleTable table =
        sample_table(selector, grid, kind_of(o.kind), params, o.workers, mode);

    SampleMeta meta;
    meta.selector = selector;
    meta.kind_label = o.kind;
    meta.params = params;
    meta.grid = grid_text;
    meta.tol = o.tol;
    meta.rng_seed = o.rng_seed;
    meta.has_seed = seed_given;
    if (selector == "charge_profile")
        meta.profile_mode = mode == ProfileMode::Integrated ? "integrated" : "slice";

    std::ostringstream os;
    if (format == "csv")
        write_sample_csv(os, table, meta);
    else if (format == "json")
        write_sample_json(os, table, meta);
    else
        throw DomainError("unknown format '" + format + "' (csv, json)");
    emit(out, os.str());

    if (!out.empty())
        std::cout << "wrote " << out << " rows=" << table.rows.size()
                  << " wall_seconds=" << format_double(elapsed_since(t0)) << "\n";
    compton_note(o);
    return 0;
}

// --- trace ------------------------------------------------------------------

TraceSource source_of(const std::string& s) {
    if (s == "current_j_plus") return TraceSource::CurrentJPlus;
    if (s == "velocity_dirac") return TraceSource::VelocityDirac;
    if (s == "velocity_maxwell") return TraceSource::VelocityMaxwell;
    throw DomainError("unknown trace source '" + s +
                      "' (current_j_plus, velocity_dirac, velocity_maxwell)");
}

std::string indexed_path(const std::string& out, std::size_t i, std::size_t n) {
    if (n == 1) return out;
    const std::size_t dot = out.rfind('.');
    const std::string stem = dot == std::string::npos ? out : out.substr(0, dot);
    const std::string ext = dot == std::string::npos ? "" : out.substr(dot);
    return stem + "-seed" + std::to_string(i) + ext;
}

int cmd_trace(const CommonOpts& o, const std::string& source_text,
              const std::string& seeds_text, double lambda_max, double t,
              const std::string& format, const std::string& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const TraceSource source = source_of(source_text);
    const PacketParams params = params_of(o);
    const std::vector<Vec3> seeds = parse_seeds(seeds_text);
    if (lambda_max <= 0) lambda_max = 20 * params.a;

    OdeControl ctl;
    if (o.tol > 0) {
        ctl.rel_tol = o.tol;
        ctl.abs_tol = o.tol * 1e-2;
    }

    std::vector<StreamlineTrace> traces(seeds.size());
    {
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex mu;
        const int n = std::min<int>(o.workers, int(seeds.size()));
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= seeds.size()) return;
                try {
                    traces[i] = trace_line(source, seeds[i], lambda_max, params, t, ctl);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        };
        for (int w = 0; w < n; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }

    for (std::size_t i = 0; i < seeds.size(); ++i) {
        TraceMeta meta;
        meta.source = source_text;
        meta.params = params;
        meta.seed = seeds[i];
        meta.t = t;
        meta.lambda_max = lambda_max;

        std::ostringstream os;
        if (format == "csv")
            write_trace_csv(os, traces[i], meta);
        else if (format == "json")
            write_trace_json(os, traces[i], meta);
        else
            throw DomainError("unknown format '" + format + "' (csv, json)");
        emit(indexed_path(out, i, seeds.size()), os.str());

        std::ostringstream line;
        line << "seed=" << format_double(seeds[i].x) << "," << format_double(seeds[i].y)
             << "," << format_double(seeds[i].z);
        try {
            line << " closure_metric=" << format_double(closure_metric(traces[i]));
        } catch (const DegenerateError& e) {
            line << " closure_metric=n/a (" << e.what() << ")";
        }
        line << " points=" << traces[i].points.size()
             << " aborted=" << (traces[i].aborted ? 1 : 0);
        if (!out.empty())
            std::cout << line.str() << "\n";
        else
            std::cerr << line.str() << "\n";
    }
    if (!out.empty())
        std::cout << "wall_seconds=" << format_double(elapsed_since(t0)) << "\n";
    compton_note(o);
    return 0;
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const CommonOpts& o, const std::string& analysis, double t,
                const std::string& format, const std::string& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const PacketParams params = params_of(o);
    const BispinorKind kind = kind_of(o.kind);

    nlohmann::ordered_json results;
    if (analysis == "norm") {
        results["normalization_constant"] = normalization_constant(kind, params).N;
        results["space_integral"] = norm_integral(kind, params);
        if (params.v == 0) results["momentum_integral"] = momentum_total(kind, params);
        if (params.v != 0) results["boost_norm_factor"] = boost_norm_factor(kind, params);
    } else if (analysis == "moments") {
        results["r2_mean"] = spatial_moment(kind, params, t);
        results["p2_mean"] = momentum_p2(kind, params);
        results["pz_mean"] = momentum_pz(kind, params);
        results["b_spread"] = momentum_b(kind, params);
    } else if (analysis == "spreading") {
        const SpreadingFit fit = spreading_fit(kind, params);
        results["r2_0"] = fit.r2_0;
        results["b"] = fit.b;
        results["residual"] = fit.residual;
        results["t_samples"] = fit.t_samples;
        results["r2_values"] = fit.r2_values;
    } else if (analysis == "uncertainty") {
        const UncertaintyResult u = uncertainty_product(kind, params);
        results["r2_mean"] = u.r2_mean;
        results["p2_mean"] = u.p2_mean;
        results["pz_mean"] = u.pz_mean;
        results["dr"] = u.dr;
        results["dp"] = u.dp;
        results["product"] = u.product;
    } else {
        throw DomainError("unknown analysis '" + analysis +
                          "' (norm, moments, spreading, uncertainty)");
    }

    std::ostringstream os;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["format"] = "hopfion-analyze/1";
        j["analysis"] = analysis;
        nlohmann::ordered_json meta;
        meta["kind"] = o.kind;
        meta["l"] = params.l;
        meta["a"] = params.a;
        meta["m"] = params.m;
        meta["v"] = params.v;
        meta["t"] = t;
        meta["tol"] = o.tol > 0 ? nlohmann::ordered_json(o.tol)
                                : nlohmann::ordered_json("default");
        meta["conventions"] = {{"boost_phase", "+2*a*gamma*(t-v*z)"},
                               {"momentum_spread", "central"}};
        j["metadata"] = meta;
        j["results"] = results;
        os << j.dump(1, '\t') << "\n";
    } else if (format == "csv") {
        os << "# hopfion-analyze v1\n";
        os << "# analysis=" << analysis << "\n";
        os << "# kind=" << o.kind << "\n";
        os << "# l=" << params.l << "\n";
        os << "# a=" << format_double(params.a) << "\n";
        os << "# m=" << format_double(params.m) << "\n";
        os << "# v=" << format_double(params.v) << "\n";
        os << "# t=" << format_double(t) << "\n";
        os << "# convention_boost_phase=+2*a*gamma*(t-v*z)\n";
        os << "# convention_momentum_spread=central\n";
        os << "key,value\n";
        for (const auto& [key, val] : results.items()) {
            if (val.is_array()) {
                os << key;
                for (const auto& x : val) os << ';' << format_double(x.get<double>());
                os << "\n";
                continue;
            }
            os << key << ',' << format_double(val.get<double>()) << "\n";
        }
    } else {
        throw DomainError("unknown format '" + format + "' (csv, json)");
    }
    emit(out, os.str());
    if (!out.empty())
        std::cout << "wrote " << out
                  << " wall_seconds=" << format_double(elapsed_since(t0)) << "\n";
    compton_note(o);
    return 0;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const CommonOpts& o, bool full, const std::string& out, bool seed_given) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;
    if (seed_given) opt.rng_seed = o.rng_seed;
    opt.tol_override = o.tol;
    opt.workers = o.workers;
    opt.quick = !full;

    const RunReport report = run_verify(opt);
    const std::string body = report.body(opt);
    if (!out.empty()) emit(out, body);

    std::cout << body;
    std::cout << "wall_seconds=" << format_double(elapsed_since(t0)) << "\n";
    if (!report.all_passed()) {
        std::cout << "failing checks:\n";
        for (const auto& c : report.checks)
            if (!c.passed)
                std::cout << "  " << c.name << " value=" << format_double(c.value)
                          << " threshold=" << format_double(c.threshold) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfion: localized relativistic electron states with Hopf topology"};
    app.require_subcommand(1);

    CommonOpts sample_o, trace_o, analyze_o, verify_o;

    auto* sample = app.add_subcommand("sample", "evaluate a field selector on a grid");
    std::string selector, grid_text, sample_format = "csv", sample_out, profile_mode;
    add_common(sample, sample_o);
    sample->add_option("selector", selector,
                       "f_l, j_mu, v_dirac, v_maxwell, rs_vector, charge_profile, upsilon")
        ->required();
    sample->add_option("--grid", grid_text, "grid spec, e.g. x=-2:2:101,y=0,z=0,t=0")
        ->required();
    sample->add_option("--format", sample_format, "csv or json");
    sample->add_option("--out", sample_out, "output file (default stdout)");
    sample->add_option("--profile-mode", profile_mode,
                       "charge_profile mode: slice (default) or integrated");

    auto* trace = app.add_subcommand("trace", "integrate field lines from seed points");
    std::string source_text, seeds_text, trace_format = "csv", trace_out;
    double lambda_max = 0, trace_t = 0;
    add_common(trace, trace_o);
    trace->add_option("source", source_text,
                      "current_j_plus, velocity_dirac, velocity_maxwell")
        ->required();
    trace->add_option("--seeds", seeds_text, "seed points \"x,y,z;x,y,z\"")->required();
    trace->add_option("--lambda-max", lambda_max, "arc-length budget (default 20a)");
    trace->add_option("--t", trace_t, "time slice");
    trace->add_option("--format", trace_format, "csv or json");
    trace->add_option("--out", trace_out, "output file; -seedN added for multiple seeds");

    auto* analyze = app.add_subcommand("analyze", "packet-level integral quantities");
    std::string analysis, analyze_format = "json", analyze_out;
    double analyze_t = 0;
    add_common(analyze, analyze_o);
    analyze->add_option("analysis", analysis, "norm, moments, spreading, uncertainty")
        ->required();
    analyze->add_option("--t", analyze_t, "time slice for moments");
    analyze->add_option("--format", analyze_format, "csv or json");
    analyze->add_option("--out", analyze_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the self-check suite");
    std::string verify_out;
    bool full = false, quick = false;
    add_common(verify, verify_o);
    verify->add_flag("--full", full, "full suite (minutes)");
    verify->add_flag("--quick", quick, "reduced suite (seconds; default)");
    verify->add_option("--out", verify_out, "write the report body to this file");

    int rc = 0;
    sample->callback([&] {
        rc = cmd_sample(sample_o, selector, grid_text, sample_format, sample_out,
                        profile_mode, sample->count("--rng-seed") > 0);
    });
    trace->callback([&] {
        rc = cmd_trace(trace_o, source_text, seeds_text, lambda_max, trace_t, trace_format,
                       trace_out);
    });
    analyze->callback([&] {
        rc = cmd_analyze(analyze_o, analysis, analyze_t, analyze_format, analyze_out);
    });
    verify->callback([&] {
        if (full && quick) throw DomainError("choose one of --quick / --full");
        rc = cmd_verify(verify_o, full, verify_out, verify->count("--rng-seed") > 0);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const AccuracyError& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateError& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
