#pragma once

#include <functional>

#include "hopfion/types.hpp"

namespace hopfion {

struct DerivResult {
    cplx value{};
    double error_estimate = 0;  // from the extrapolation tableau
    bool flagged = false;       // error_estimate exceeded the caller's tolerance
};

// Central-difference derivative of the given order (1 or 2) with Ridders-style
// Richardson extrapolation over a shrinking sequence of step sizes. The error
// estimate is the minimal disagreement between neighboring tableau entries;
// results whose estimate exceeds tol come back flagged rather than thrown.
DerivResult richardson_derivative(const std::function<cplx(double)>& f, double x0,
                                  int order, double h0 = 0.25, double tol = 1e-8);

}  // namespace hopfion
