#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopfion/dynamics.hpp"
#include "hopfion/ode.hpp"
#include "hopfion/types.hpp"

namespace hopfion {

// One axis of a sampling grid: either fixed at lo (count = 1) or a uniform
// inclusive range lo..hi with count >= 2 points.
struct AxisSpec {
    double lo = 0, hi = 0;
    int count = 1;
    bool varying() const { return count > 1; }
    std::vector<double> values() const;
};

// Parsed form of a grid string like "x=-2:2:101,y=0,z=-1:1:51,t=0".
// Unmentioned axes are fixed at 0.  Row order is row-major with the later
// varying axis (in x, y, z, t order) fastest.
struct GridSpec {
    AxisSpec x, y, z, t;
    static GridSpec parse(const std::string& text);
    const AxisSpec& axis(char name) const;
    std::vector<char> varying_axes() const;  // subset of {x,y,z,t}, in order
    std::size_t total() const;
};

// Seeds string "x,y,z;x,y,z" -> points.
std::vector<Vec3> parse_seeds(const std::string& text);

// Shortest round-trip decimal form of a double; locale-free, deterministic.
std::string format_double(double v);

// A sampled table: varying-axis coordinates first, then value columns.
// Vector-valued selectors emit components for the varying spatial axes only,
// so a plane sample of a velocity field carries its in-plane components.
struct SampleTable {
    std::vector<std::string> columns;       // full header, coords included
    std::size_t coord_count = 0;            // leading coordinate columns
    std::vector<std::vector<double>> rows;
};

// Everything an output file must embed to be reproducible on its own.
struct SampleMeta {
    std::string selector;
    std::string kind_label;
    PacketParams params;
    std::string grid;
    double tol = 0;                 // 0 = library defaults
    std::uint64_t rng_seed = 0;
    bool has_seed = false;
    std::string profile_mode;       // set for charge_profile
};

SampleTable sample_table(const std::string& selector, const GridSpec& grid,
                         BispinorKind kind, const PacketParams& params, int workers = 1,
                         ProfileMode profile_mode = ProfileMode::Slice);

void write_sample_csv(std::ostream& os, const SampleTable& table, const SampleMeta& meta);
void write_sample_json(std::ostream& os, const SampleTable& table, const SampleMeta& meta);

struct TraceMeta {
    std::string source;
    PacketParams params;
    Vec3 seed;
    double t = 0;
    double lambda_max = 0;
};

void write_trace_csv(std::ostream& os, const StreamlineTrace& trace, const TraceMeta& meta);
void write_trace_json(std::ostream& os, const StreamlineTrace& trace, const TraceMeta& meta);

}  // namespace hopfion
