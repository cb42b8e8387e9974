#pragma once

#include <functional>

#include "hopfion/types.hpp"

namespace hopfion {

struct ToleranceConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_evals = 20'000'000;

    void validate() const {
        if (!(rel_tol > 0 && rel_tol < 1) || !(abs_tol > 0 && abs_tol < 1))
            throw DomainError("ToleranceConfig: tolerances must lie in (0, 1)");
        if (max_evals <= 0) throw DomainError("ToleranceConfig: max_evals must be positive");
    }
    static ToleranceConfig quadrature_3d() { return {1e-7, 1e-9, 80'000'000}; }
};

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0;
    long evaluations = 0;
};

// Adaptive Gauss-Legendre pair (7/15 points) on a finite interval.
// Nodes and weights are derived at startup by Newton iteration on the
// Legendre recurrence, so there are no embedded coefficient tables to trust.
QuadratureResult<double> integrate_1d(const std::function<double(double)>& f, double a,
                                      double b, const ToleranceConfig& tol = {});
QuadratureResult<cplx> integrate_1d_c(const std::function<cplx(double)>& f, double a,
                                      double b, const ToleranceConfig& tol = {});

// Semi-infinite [a, inf): exponential change of variable x = a - scale*ln(1-u)
// maps exponentially decaying tails onto [0, 1).
QuadratureResult<double> integrate_semi_inf(const std::function<double(double)>& f,
                                            double a, const ToleranceConfig& tol = {},
                                            double scale = 1.0);
QuadratureResult<cplx> integrate_semi_inf_c(const std::function<cplx(double)>& f, double a,
                                            const ToleranceConfig& tol = {},
                                            double scale = 1.0);

// Volume integral of f over R^3 in spherical coordinates, truncated where the
// exponential envelope set by params (rate 2m, offset by packet size a) falls
// below abs_tol. When axisymmetric is set the azimuthal integral is taken
// analytically as 2*pi*f(phi = 0), reducing the work to two dimensions.
QuadratureResult<double> integrate_3d(const std::function<double(const Vec3&)>& f,
                                      const PacketParams& params,
                                      const ToleranceConfig& tol = ToleranceConfig::quadrature_3d(),
                                      bool axisymmetric = true);

}  // namespace hopfion
