#include "tunnelsplit/semiclassical.hpp"

#include <cmath>

namespace tunnelsplit {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
}  // namespace

double separatrix_area(const PotentialProfile& p, const QuadratureConfig& cfg) {
    const double m = p.ctx.mass;
    auto f = [&](double q) {
        const double v = p.value(q);
        return std::sqrt(std::max(2.0 * m * v, 0.0));
    };
    // 2 int_{-a}^{a} = 4 int_0^a by symmetry
    return 4.0 * integrate(f, 0.0, p.a, cfg).value;
}

double time_defect(const PotentialProfile& p, const QuadratureConfig& cfg) {
    const double m = p.ctx.mass;
    const double w = p.omega;
    // (m/p)(|dq/dp| - 1/(m w)) dp in the q-parametrization:
    // m/p(q) - |V'(q)| / (2 w V(q)), with p(q) = sqrt(2 m V(q)).
    auto f = [&](double q) {
        const Dual2 d = p.derivatives(q);
        const double psq = 2.0 * m * d.v;
        if (psq <= 1e-300) return 0.0;  // within rounding of the well base
        return m / std::sqrt(psq) - std::fabs(d.d1) / (2.0 * w * d.v);
    };
    return integrate(f, 0.0, p.a, cfg).value;
}

double epsilon_constant(const PotentialProfile& p, const QuadratureConfig& cfg) {
    const double m = p.ctx.mass;
    const double P = p.p_central;
    return (2.0 * P * P / m) * std::exp(2.0 * p.omega * time_defect(p, cfg));
}

double action_S(const PotentialProfile& p, double energy, const QuadratureConfig& cfg) {
    if (!(energy > 0.0) || !(energy < p.v_max))
        throw EOutOfRangeError("action_S requires 0 < E < v_max");
    const double eps = epsilon_constant(p, cfg);
    const double s0 = separatrix_area(p, cfg);
    return s0 + (2.0 * energy / p.omega) * (std::log(energy / eps) - 1.0);
}

double period_T(const PotentialProfile& p, double energy, const QuadratureConfig& cfg) {
    const double eps = epsilon_constant(p, cfg);
    if (!(energy > 0.0) || !(energy < eps))
        throw EOutOfRangeError("period_T requires 0 < E < epsilon");
    return -(2.0 / p.omega) * std::log(energy / eps);
}

TimeBudget time_budget(const PotentialProfile& p, const QuadratureConfig& cfg) {
    const double m = p.ctx.mass;
    const double w = p.omega;
    const double hbar = p.ctx.hbar;
    TimeBudget tb;
    tb.q_match = std::sqrt(hbar / (m * w));
    if (tb.q_match >= p.a)
        throw MatchPointOutsideWellError("harmonic matching length Q >= a: not semiclassical");
    tb.t1_leading = std::log(2.0 * p.p_central / std::sqrt(m * w * hbar)) / w;
    tb.t1_exact_harmonic = std::asinh(p.p_central / (m * w * tb.q_match)) / w;
    tb.defect = time_defect(p, cfg);
    tb.period_eq7 = 4.0 * (tb.t1_leading + tb.defect);
    return tb;
}

SemiclassicalReport ground_splitting(const PotentialProfile& p, const QuadratureConfig& cfg) {
    const double hbar = p.ctx.hbar;
    const double w = p.omega;
    const double energy = 0.5 * hbar * w;
    if (!(energy < p.v_max))
        throw BarrierTooLowError("hbar*omega/2 >= v_max: no tunnelling regime");

    SemiclassicalReport r;
    r.s0 = separatrix_area(p, cfg);
    r.epsilon = epsilon_constant(p, cfg);
    r.e_ground_ref = energy;
    r.s_action = r.s0 + (2.0 * energy / w) * (std::log(energy / r.epsilon) - 1.0);
    r.period = -(2.0 / w) * std::log(energy / r.epsilon);
    r.delta_e = std::sqrt(kPi / kE) * (hbar * w / kPi) * std::exp(-r.s_action / (2.0 * hbar));
    r.e_minus = energy - 0.5 * r.delta_e;
    r.e_plus = energy + 0.5 * r.delta_e;
    r.flip_rate = r.delta_e / (2.0 * kPi * hbar);
    return r;
}

WkbTail splitting_wkb_direct(const PotentialProfile& p, WkbMatchPoint match,
                             const QuadratureConfig& cfg) {
    const double m = p.ctx.mass;
    const double w = p.omega;
    const double hbar = p.ctx.hbar;
    const double energy = 0.5 * hbar * w;
    if (!(energy < p.v_max))
        throw BarrierTooLowError("hbar*omega/2 >= v_max: no tunnelling regime");

    // u measures distance from the well minimum toward the barrier center,
    // so the potential along the tail is V(a - u).
    double u_low = std::sqrt(hbar / (m * w));
    if (match == WkbMatchPoint::turning_point) {
        const double q_t = find_root([&](double q) { return p.value(q) - energy; }, 0.0, p.a,
                                     1e-14 * p.a);
        u_low = p.a - q_t;
    }
    if (u_low >= p.a)
        throw MatchPointOutsideWellError("WKB matching point reached the barrier center");

    // Where the true potential dips below the matched energy just past Q,
    // the clamped stretch contributes nothing; start at the zero of the
    // integrand so its square-root onset sits on the integration endpoint.
    if (match == WkbMatchPoint::harmonic_length && p.value(p.a - u_low) < energy) {
        const double u_t = find_root([&](double u) { return p.value(p.a - u) - energy; }, u_low,
                                     p.a, 1e-14 * p.a);
        u_low = u_t;
    }

    auto k = [&](double u) {
        const double under = p.value(p.a - u) - energy;
        return std::sqrt(std::max(2.0 * m * under, 0.0)) / hbar;
    };
    WkbTail t;
    t.k_integral = integrate(k, u_low, p.a, cfg).value;
    t.norm_sq = m * w / (hbar * std::sqrt(4.0 * kPi * kE));
    t.delta_e_herring = 2.0 * (hbar * hbar / m) * t.norm_sq * std::exp(-2.0 * t.k_integral);
    return t;
}

}  // namespace tunnelsplit
