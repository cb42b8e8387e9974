#include "hopfion/deriv.hpp"

#include <cmath>
#include <limits>

namespace hopfion {

DerivResult richardson_derivative(const std::function<cplx(double)>& f, double x0,
                                  int order, double h0, double tol) {
    if (order != 1 && order != 2)
        throw DomainError("richardson_derivative: order must be 1 or 2");
    if (!(h0 > 0)) throw DomainError("richardson_derivative: h0 must be positive");

    constexpr int ntab = 12;
    constexpr double shrink = 1.6;
    const double shrink_sq = shrink * shrink;

    cplx tab[ntab][ntab];
    DerivResult best;
    best.error_estimate = std::numeric_limits<double>::max();

    double h = h0;
    const cplx f0 = (order == 2) ? f(x0) : cplx{};
    for (int i = 0; i < ntab; ++i, h /= shrink) {
        // Central stencils: O(h^2) leading error, even powers only, so each
        // tableau column gains two orders.
        tab[i][0] = (order == 1) ? (f(x0 + h) - f(x0 - h)) / (2.0 * h)
                                 : (f(x0 + h) - 2.0 * f0 + f(x0 - h)) / (h * h);
        double fac = shrink_sq;
        for (int j = 1; j <= i; ++j, fac *= shrink_sq) {
            tab[i][j] = (fac * tab[i][j - 1] - tab[i - 1][j - 1]) / (fac - 1.0);
            const double err = std::max(std::abs(tab[i][j] - tab[i][j - 1]),
                                        std::abs(tab[i][j] - tab[i - 1][j - 1]));
            if (err <= best.error_estimate) {
                best.error_estimate = err;
                best.value = tab[i][j];
            }
        }
        // Once round-off dominates, higher rows only get worse.
        if (i > 1 && std::abs(tab[i][i] - tab[i - 1][i - 1]) >= 2.0 * best.error_estimate)
            break;
    }
    best.flagged = !(best.error_estimate <= tol * std::max(1.0, std::abs(best.value)));
    return best;
}

}  // namespace hopfion
