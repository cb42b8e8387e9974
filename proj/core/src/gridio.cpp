#include "hopfion/gridio.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hopfion/dirac.hpp"
#include "hopfion/kg.hpp"
#include "hopfion/maxwell.hpp"
#include "hopfion/quadrature.hpp"
#include "hopfion/topology.hpp"

namespace hopfion {
namespace {

double parse_number(const std::string& s) {
    double v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e)
        throw DomainError("grid: bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::vector<double> AxisSpec::values() const {
    std::vector<double> v;
    if (count == 1) {
        v.push_back(lo);
        return v;
    }
    for (int i = 0; i < count; ++i)
        v.push_back(lo + (hi - lo) * double(i) / double(count - 1));
    return v;
}

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec g;
    bool seen[4] = {};
    for (const std::string& entry : split(text, ',')) {
        if (entry.empty()) throw DomainError("grid: empty entry");
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos || eq != 1)
            throw DomainError("grid: expected axis=spec in '" + entry + "'");
        const char axis = entry[0];
        int idx;
        switch (axis) {
            case 'x': idx = 0; break;
            case 'y': idx = 1; break;
            case 'z': idx = 2; break;
            case 't': idx = 3; break;
            default: throw DomainError(std::string("grid: unknown axis '") + axis + "'");
        }
        if (seen[idx]) throw DomainError(std::string("grid: duplicate axis '") + axis + "'");
        seen[idx] = true;

        const std::string spec = entry.substr(eq + 1);
        const auto parts = split(spec, ':');
        AxisSpec a;
        if (parts.size() == 1) {
            a.lo = a.hi = parse_number(parts[0]);
            a.count = 1;
        } else if (parts.size() == 3) {
            a.lo = parse_number(parts[0]);
            a.hi = parse_number(parts[1]);
            const double c = parse_number(parts[2]);
            if (c < 2 || c != std::floor(c) || c > 1e7)
                throw DomainError("grid: count must be an integer >= 2 in '" + entry + "'");
            a.count = int(c);
            if (a.lo == a.hi) throw DomainError("grid: empty range in '" + entry + "'");
        } else {
            throw DomainError("grid: expected value or lo:hi:count in '" + entry + "'");
        }
        (idx == 0 ? g.x : idx == 1 ? g.y : idx == 2 ? g.z : g.t) = a;
    }
    return g;
}

const AxisSpec& GridSpec::axis(char name) const {
    switch (name) {
        case 'x': return x;
        case 'y': return y;
        case 'z': return z;
        case 't': return t;
    }
    throw DomainError("grid: unknown axis");
}

std::vector<char> GridSpec::varying_axes() const {
    std::vector<char> v;
    for (char c : {'x', 'y', 'z', 't'})
        if (axis(c).varying()) v.push_back(c);
    return v;
}

std::size_t GridSpec::total() const {
    return std::size_t(x.count) * y.count * z.count * t.count;
}

std::vector<Vec3> parse_seeds(const std::string& text) {
    std::vector<Vec3> out;
    for (const std::string& entry : split(text, ';')) {
        if (entry.empty()) continue;
        const auto parts = split(entry, ',');
        if (parts.size() != 3)
            throw DomainError("seeds: expected x,y,z in '" + entry + "'");
        out.push_back(
            {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])});
    }
    if (out.empty()) throw DomainError("seeds: none given");
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

namespace {

using RowFn = std::function<std::vector<double>(const SpaceTimePoint&)>;

RowFn make_selector(const std::string& selector, BispinorKind kind,
                    const PacketParams& params, const std::vector<char>& spatial_vary,
                    ProfileMode mode, std::vector<std::string>& cols) {
    if (selector == "f_l") {
        cols = {"re", "im"};
        return [params](const SpaceTimePoint& p) {
            const cplx f = scalar_field(p, params);
            return std::vector<double>{f.real(), f.imag()};
        };
    }
    if (selector == "j_mu") {
        cols = {"j0", "jx", "jy", "jz"};
        return [kind, params](const SpaceTimePoint& p) {
            const FourCurrent j = four_current(kind, p, params);
            return std::vector<double>{j.j0, j.jx, j.jy, j.jz};
        };
    }
    if (selector == "v_dirac" || selector == "v_maxwell") {
        // In-plane components only: one column per varying spatial axis.
        std::vector<int> comps;
        for (char c : spatial_vary) {
            cols.push_back(std::string("v") + c);
            comps.push_back(c == 'x' ? 0 : c == 'y' ? 1 : 2);
        }
        if (comps.empty()) {
            cols = {"vx", "vy", "vz"};
            comps = {0, 1, 2};
        }
        const bool dirac = selector == "v_dirac";
        return [dirac, params, comps](const SpaceTimePoint& p) {
            const Vec3 v = dirac ? velocity_dirac(p, params)
                                 : velocity_maxwell(p, params.a);
            std::vector<double> out;
            for (int c : comps) out.push_back(c == 0 ? v.x : c == 1 ? v.y : v.z);
            return out;
        };
    }
    if (selector == "rs_vector") {
        cols = {"Fx_re", "Fx_im", "Fy_re", "Fy_im", "Fz_re", "Fz_im"};
        return [params](const SpaceTimePoint& p) {
            const auto F = rs_vector(p, params.l, params.a);
            return std::vector<double>{F[0].real(), F[0].imag(), F[1].real(),
                                       F[1].imag(), F[2].real(), F[2].imag()};
        };
    }
    if (selector == "upsilon") {
        cols = {"re", "im", "at_infinity"};
        return [params](const SpaceTimePoint& p) {
            const Stereographic u = hopf_map(velocity_maxwell(p, params.a));
            return std::vector<double>{u.infinite ? 0.0 : u.value.real(),
                                       u.infinite ? 0.0 : u.value.imag(),
                                       u.infinite ? 1.0 : 0.0};
        };
    }
    if (selector == "charge_profile") {
        cols = {"density"};
        return [kind, params, mode](const SpaceTimePoint& p) {
            double d;
            if (mode == ProfileMode::Slice) {
                d = four_current(kind, {p.x, 0.0, p.z, p.t}, params).j0;
            } else {
                const ToleranceConfig tol{1e-9, 1e-12, 20'000'000};
                auto f = [&](double y) {
                    return four_current(kind, {p.x, y, p.z, p.t}, params).j0;
                };
                d = 2 * integrate_semi_inf(f, 0.0, tol, params.a + 1 / params.m).value;
            }
            return std::vector<double>{d};
        };
    }
    throw DomainError("sample: unknown selector '" + selector + "'");
}

}  // namespace

SampleTable sample_table(const std::string& selector, const GridSpec& grid,
                         BispinorKind kind, const PacketParams& params, int workers,
                         ProfileMode profile_mode) {
    params.validate();
    if (workers < 1) throw DomainError("sample: workers must be >= 1");
    if (selector == "charge_profile") {
        if (!grid.x.varying() || !grid.z.varying() || grid.y.varying())
            throw DomainError("sample: charge_profile wants x and z varying, y fixed");
    }

    SampleTable table;
    const auto vary = grid.varying_axes();
    std::vector<char> spatial_vary;
    for (char c : vary)
        if (c != 't') spatial_vary.push_back(c);
    for (char c : vary) table.columns.push_back(std::string(1, c));
    table.coord_count = vary.size();

    std::vector<std::string> value_cols;
    const RowFn fn =
        make_selector(selector, kind, params, spatial_vary, profile_mode, value_cols);
    for (const auto& c : value_cols) table.columns.push_back(c);

    const auto xs = grid.x.values(), ys = grid.y.values(), zs = grid.z.values(),
               ts = grid.t.values();
    const std::size_t total = grid.total();
    table.rows.assign(total, {});

    auto compute = [&](std::size_t lo, std::size_t hi) {
        const std::size_t nt = ts.size(), nz = zs.size(), ny = ys.size();
        for (std::size_t idx = lo; idx < hi; ++idx) {
            std::size_t rem = idx;
            const std::size_t it = rem % nt;
            rem /= nt;
            const std::size_t iz = rem % nz;
            rem /= nz;
            const std::size_t iy = rem % ny;
            const std::size_t ix = rem / ny;
            const SpaceTimePoint p{xs[ix], ys[iy], zs[iz], ts[it]};

            std::vector<double>& row = table.rows[idx];
            for (char c : vary)
                row.push_back(c == 'x' ? p.x : c == 'y' ? p.y : c == 'z' ? p.z : p.t);
            for (double v : fn(p)) row.push_back(v);
        }
    };

    if (workers == 1 || total < 64) {
        compute(0, total);
    } else {
        const int n = std::min<std::size_t>(workers, total);
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex err_mu;
        for (int w = 0; w < n; ++w) {
            const std::size_t lo = total * w / n, hi = total * (w + 1) / n;
            pool.emplace_back([&, lo, hi] {
                try {
                    compute(lo, hi);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }
    return table;
}

namespace {

void meta_lines(std::ostream& os, const SampleMeta& m) {
    os << "# selector=" << m.selector << "\n";
    os << "# kind=" << m.kind_label << "\n";
    os << "# l=" << m.params.l << "\n";
    os << "# a=" << format_double(m.params.a) << "\n";
    os << "# m=" << format_double(m.params.m) << "\n";
    os << "# v=" << format_double(m.params.v) << "\n";
    os << "# grid=" << m.grid << "\n";
    os << "# tol=" << (m.tol > 0 ? format_double(m.tol) : "default") << "\n";
    if (m.has_seed) os << "# rng_seed=" << m.rng_seed << "\n";
    if (!m.profile_mode.empty()) os << "# profile_mode=" << m.profile_mode << "\n";
    os << "# convention_boost_phase=+2*a*gamma*(t-v*z)\n";
    os << "# convention_momentum_spread=central\n";
}

nlohmann::ordered_json meta_json(const SampleMeta& m) {
    nlohmann::ordered_json meta;
    meta["selector"] = m.selector;
    meta["kind"] = m.kind_label;
    meta["l"] = m.params.l;
    meta["a"] = m.params.a;
    meta["m"] = m.params.m;
    meta["v"] = m.params.v;
    meta["grid"] = m.grid;
    if (m.tol > 0)
        meta["tol"] = m.tol;
    else
        meta["tol"] = "default";
    if (m.has_seed) meta["rng_seed"] = m.rng_seed;
    if (!m.profile_mode.empty()) meta["profile_mode"] = m.profile_mode;
    meta["conventions"] = {{"boost_phase", "+2*a*gamma*(t-v*z)"},
                           {"momentum_spread", "central"}};
    return meta;
}

void rows_csv(std::ostream& os, const std::vector<std::vector<double>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_double(row[i]);
        }
        os << "\n";
    }
}

}  // namespace

void write_sample_csv(std::ostream& os, const SampleTable& table, const SampleMeta& meta) {
    os << "# hopfion-sample v1\n";
    meta_lines(os, meta);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << "\n";
    rows_csv(os, table.rows);
}

void write_sample_json(std::ostream& os, const SampleTable& table, const SampleMeta& meta) {
    nlohmann::ordered_json j;
    j["format"] = "hopfion-sample/1";
    j["metadata"] = meta_json(meta);
    j["columns"] = table.columns;
    j["data"] = table.rows;
    os << j.dump(1, '\t') << "\n";
}

namespace {

nlohmann::ordered_json trace_meta_json(const TraceMeta& m, const StreamlineTrace& tr) {
    nlohmann::ordered_json meta;
    meta["source"] = m.source;
    meta["l"] = m.params.l;
    meta["a"] = m.params.a;
    meta["m"] = m.params.m;
    meta["v"] = m.params.v;
    meta["t"] = m.t;
    meta["seed"] = {m.seed.x, m.seed.y, m.seed.z};
    meta["lambda_max"] = m.lambda_max;
    meta["aborted"] = tr.aborted;
    meta["conventions"] = {{"boost_phase", "+2*a*gamma*(t-v*z)"},
                           {"momentum_spread", "central"}};
    return meta;
}

}  // namespace

void write_trace_csv(std::ostream& os, const StreamlineTrace& trace, const TraceMeta& meta) {
    os << "# hopfion-trace v1\n";
    os << "# source=" << meta.source << "\n";
    os << "# l=" << meta.params.l << "\n";
    os << "# a=" << format_double(meta.params.a) << "\n";
    os << "# m=" << format_double(meta.params.m) << "\n";
    os << "# v=" << format_double(meta.params.v) << "\n";
    os << "# t=" << format_double(meta.t) << "\n";
    os << "# seed=" << format_double(meta.seed.x) << "," << format_double(meta.seed.y)
       << "," << format_double(meta.seed.z) << "\n";
    os << "# lambda_max=" << format_double(meta.lambda_max) << "\n";
    os << "# aborted=" << (trace.aborted ? 1 : 0) << "\n";
    os << "# convention_boost_phase=+2*a*gamma*(t-v*z)\n";
    os << "lambda,x,y,z\n";
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        os << format_double(trace.lambdas[i]) << ',' << format_double(trace.points[i].x)
           << ',' << format_double(trace.points[i].y) << ','
           << format_double(trace.points[i].z) << "\n";
    }
}

void write_trace_json(std::ostream& os, const StreamlineTrace& trace, const TraceMeta& meta) {
    nlohmann::ordered_json j;
    j["format"] = "hopfion-trace/1";
    j["metadata"] = trace_meta_json(meta, trace);
    j["columns"] = {"lambda", "x", "y", "z"};
    auto& data = j["data"];
    data = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < trace.points.size(); ++i)
        data.push_back({trace.lambdas[i], trace.points[i].x, trace.points[i].y,
                        trace.points[i].z});
    os << j.dump(1, '\t') << "\n";
}

}  // namespace hopfion
