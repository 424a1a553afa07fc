#ifndef TUNNELSPLIT_QUADRATURE_HPP
#define TUNNELSPLIT_QUADRATURE_HPP

#include <cstddef>
#include <functional>

#include "tunnelsplit/errors.hpp"

namespace tunnelsplit {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_levels = 12;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |last level - previous level|
    int levels = 0;
    std::size_t evaluations = 0;
};

// Tanh-sinh (double exponential) quadrature on a finite interval.
// Integrable endpoint singularities up to inverse square root are fine;
// the integrand must be finite on the open interval. Samples that land
// within rounding of an endpoint are skipped, anything else non-finite
// throws NonFiniteSampleError. Throws NoConvergenceError if the level
// difference stays above tolerance at max_levels.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureConfig& cfg = {});

// Variant for integrands singular at an endpoint: the second argument is
// the distance from the sample to the nearest endpoint, kept to full
// precision far below where (x - endpoint) would round to zero.
QuadratureResult integrate(const std::function<double(double, double)>& f, double lo, double hi,
                           const QuadratureConfig& cfg = {});

// Bracketed root finding: bisection refined with secant steps.
// Requires f(lo)*f(hi) < 0 (NoBracketError otherwise); returns x with
// bracket width <= tol.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-13);

}  // namespace tunnelsplit

#endif
