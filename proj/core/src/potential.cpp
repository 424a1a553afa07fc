#include "tunnelsplit/potential.hpp"

#include <cmath>
#include <vector>

#include "tunnelsplit/quadrature.hpp"

namespace tunnelsplit {

double PotentialProfile::value(double q) const { return expr.eval(std::fabs(q)).v - shift; }

Dual2 PotentialProfile::derivatives(double q) const {
    Dual2 d = expr.eval(std::fabs(q));
    d.v -= shift;
    if (q < 0.0) d.d1 = -d.d1;
    return d;
}

namespace {

// Chebyshev-spaced samples on (0, span], clustered toward both ends.
std::vector<double> chebyshev_points(double span, int n) {
    std::vector<double> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double theta = M_PI * (2.0 * k + 1.0) / (2.0 * n);
        pts.push_back(0.5 * span * (1.0 - std::cos(theta)));
    }
    pts.push_back(span);
    return pts;
}

void check_symmetry(const Expression& expr, double span, const AnalysisOptions& opts) {
    double scale = 0.0;
    const auto pts = chebyshev_points(span, opts.symmetry_points);
    std::vector<double> vp(pts.size()), vm(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        vp[i] = expr.eval(pts[i]).v;
        vm[i] = expr.eval(-pts[i]).v;
        scale = std::max({scale, std::fabs(vp[i]), std::fabs(vm[i])});
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double denom = std::fabs(vp[i]) + std::fabs(vm[i]) + 1e-3 * scale;
        if (std::fabs(vp[i] - vm[i]) > opts.tol_sym * denom)
            throw AsymmetricPotentialError("V(q) != V(-q) at q=" + std::to_string(pts[i]));
    }
}

}  // namespace

PotentialProfile analyze_profile(const Expression& expr, const PhysicalContext& ctx,
                                 const AnalysisOptions& opts) {
    if (!(ctx.mass > 0.0) || !(ctx.hbar > 0.0))
        throw DomainError("mass and hbar must be positive");

    // Coarse symmetry screen over the whole search interval, so that a
    // blatantly asymmetric input (q^3, ...) is named as such before the
    // minimum search can fail on it.
    check_symmetry(expr, opts.q_search_max, opts);

    // Bracket V' sign changes of minimum type (- to +) on (0, q_search_max).
    auto vprime = [&expr](double q) { return expr.eval(q).d1; };
    const int n = opts.scan_points;
    double a = 0.0;
    bool found = false;
    double prev_q = opts.q_search_max / n;
    double prev_d = vprime(prev_q);
    for (int i = 2; i <= n; ++i) {
        const double q = opts.q_search_max * i / n;
        const double d = vprime(q);
        if (prev_d < 0.0 && d >= 0.0) {
            a = find_root(vprime, prev_q, q, 1e-14 * opts.q_search_max);
            found = true;
            break;
        }
        prev_q = q;
        prev_d = d;
    }
    if (!found)
        throw NotDoubleWellError("no interior minimum of V on (0, " +
                                 std::to_string(opts.q_search_max) + ")");

    const Dual2 at_well = expr.eval(a);
    const double v0 = expr.eval(0.0).v;
    if (!(v0 > at_well.v))
        throw NotDoubleWellError("V(0) <= V(a): no barrier between the wells");
    if (!(at_well.d2 > opts.tol_root))
        throw NotDoubleWellError("V''(a) <= 0: flat-bottomed well is not supported");
    if (std::fabs(at_well.d1) > opts.tol_root)
        throw NotDoubleWellError("V'(a) did not vanish at the located minimum");

    // Single barrier: V falls monotonically from the center to the well.
    for (int i = 1; i < n; ++i) {
        const double q = a * i / n;
        if (q < 1e-3 * a || q > (1.0 - 1e-3) * a) continue;
        if (!(vprime(q) < 0.0))
            throw MultipleBarriersError("V'(q) >= 0 inside (0, a) at q=" + std::to_string(q));
    }

    // Definitive symmetry check on (0, 2a].
    check_symmetry(expr, 2.0 * a, opts);

    PotentialProfile p{expr, ctx};
    p.shift = at_well.v;
    p.a = a;
    p.v_max = v0 - at_well.v;
    p.d2_at_well = at_well.d2;
    p.omega = std::sqrt(at_well.d2 / ctx.mass);
    p.p_central = std::sqrt(2.0 * ctx.mass * p.v_max);
    if (std::fabs(p.value(a)) > opts.tol_zero)
        throw NotDoubleWellError("well base did not shift to V=0");
    return p;
}

}  // namespace tunnelsplit
