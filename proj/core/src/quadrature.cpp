#include "tunnelsplit/quadrature.hpp"

#include <cmath>
#include <limits>

namespace tunnelsplit {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kTMax = 6.7;  // abscissa offset underflows far before this

struct Node {
    double x;       // abscissa
    double delta;   // distance to the nearest endpoint
    double weight;  // dx/dt
};

// Abscissa/weight of the tanh-sinh node at parameter t for [lo, hi],
// computed from the nearer endpoint so delta keeps full precision.
Node node_at(double t, double lo, double hi) {
    const double r = 0.5 * (hi - lo);
    const double g = kHalfPi * std::sinh(t);
    const double ag = std::fabs(g);
    // 1 - tanh|g| = 2 / (1 + e^{2|g|})
    const double delta = 2.0 * r / (1.0 + std::exp(2.0 * ag));
    const double x = (t >= 0.0) ? hi - delta : lo + delta;
    const double ch = std::cosh(g);
    const double weight = r * kHalfPi * std::cosh(t) / (ch * ch);
    return {x, delta, weight};
}

using Integrand2 = std::function<double(double, double)>;

QuadratureResult integrate_core(const Integrand2& f, double lo, double hi,
                                const QuadratureConfig& cfg, double delta_floor) {
    QuadratureResult out;
    if (lo == hi) return out;
    if (lo > hi) {
        out = integrate_core(f, hi, lo, cfg, delta_floor);
        out.value = -out.value;
        return out;
    }

    auto sample = [&](double t, double& acc) -> bool {
        const Node n = node_at(t, lo, hi);
        if (n.delta <= delta_floor || n.weight < 1e-300) return false;
        const double fx = f(n.x, n.delta);
        if (!std::isfinite(fx))
            throw NonFiniteSampleError("non-finite integrand sample at x=" + std::to_string(n.x));
        const double term = n.weight * fx;
        acc += term;
        // negligible-term cutoff, relative to what has accumulated so far
        return std::fabs(term) > 1e-18 * (std::fabs(acc) + cfg.abs_tol);
    };

    double h = 1.0;
    double sum = 0.0;
    sample(0.0, sum);
    ++out.evaluations;
    int dead0 = 0;
    for (double t = h; t <= kTMax; t += h) {
        bool live_pos = sample(t, sum);
        bool live_neg = sample(-t, sum);
        out.evaluations += 2;
        dead0 = (!live_pos && !live_neg) ? dead0 + 1 : 0;
        if (dead0 >= 2 && t > 2.0) break;
    }
    double value = h * sum;
    double prev = value;

    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        int dead_pairs = 0;
        for (double t = h; t <= kTMax; t += 2.0 * h) {
            bool live_pos = sample(t, add);
            bool live_neg = sample(-t, add);
            out.evaluations += 2;
            dead_pairs = (!live_pos && !live_neg) ? dead_pairs + 1 : 0;
            if (dead_pairs >= 2 && t > 2.0) break;
        }
        value = 0.5 * prev + h * add;
        out.levels = level;
        out.error_estimate = std::fabs(value - prev);
        out.value = value;
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
        if (level >= 2 && out.error_estimate <= target) return out;
        prev = value;
    }
    throw NoConvergenceError("tanh-sinh did not converge: error estimate " +
                             std::to_string(out.error_estimate) + " after " +
                             std::to_string(cfg.max_levels) + " levels");
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const QuadratureConfig& cfg) {
    // Stop placing nodes once the offset from the endpoint would be lost
    // to rounding in the abscissa itself.
    const double scale = std::fabs(lo) + std::fabs(hi) + std::fabs(hi - lo);
    const double floor = 0.25 * std::numeric_limits<double>::epsilon() * scale;
    return integrate_core([&f](double x, double) { return f(x); }, lo, hi, cfg, floor);
}

QuadratureResult integrate(const std::function<double(double, double)>& f, double lo, double hi,
                           const QuadratureConfig& cfg) {
    return integrate_core(f, lo, hi, cfg, 1e-290);
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0))
        throw NoBracketError("find_root: f does not change sign on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    for (int iter = 0; iter < 200; ++iter) {
        if (hi - lo <= tol) return 0.5 * (lo + hi);
        // secant proposal, falling back to bisection when it leaves the
        // bracket or stops making progress
        double x = lo - flo * (hi - lo) / (fhi - flo);
        const double margin = 0.01 * (hi - lo);
        if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (lo + hi);
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    throw NoConvergenceError("find_root: bracket did not shrink to tolerance");
}

}  // namespace tunnelsplit
