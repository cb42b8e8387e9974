#pragma once

#include <functional>
#include <vector>

#include "hopfion/types.hpp"

namespace hopfion {

// Ordered polyline of a field line with its parameter values. lambdas are
// strictly increasing; points.size() == lambdas.size() >= 2 on success.
struct StreamlineTrace {
    std::vector<Vec3> points;
    std::vector<double> lambdas;
    Vec3 seed{};
    bool closed_hint = false;
    bool aborted = false;  // step underflow: partial trace, flagged not thrown

    double diameter() const;       // max pairwise extent (decimated scan)
    double arc_length() const;
    StreamlineTrace resampled(int n) const;  // uniform arc-length resampling
};

struct OdeControl {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0.1;
    double min_step = 1e-12;
    long max_steps = 2'000'000;
};

// Dormand-Prince 5(4) adaptive integration of dr/dlambda = field(r) from seed
// over lambda in [0, lambda_max]. Local error per step is kept within the
// mixed tolerance; underflow of the step size aborts with the partial trace
// flagged instead of throwing.
StreamlineTrace ode_trace(const std::function<Vec3(const Vec3&)>& field, const Vec3& seed,
                          double lambda_max, const OdeControl& ctl = {});

}  // namespace hopfion
