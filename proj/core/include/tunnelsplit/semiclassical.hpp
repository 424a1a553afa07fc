#ifndef TUNNELSPLIT_SEMICLASSICAL_HPP
#define TUNNELSPLIT_SEMICLASSICAL_HPP

#include "tunnelsplit/potential.hpp"
#include "tunnelsplit/quadrature.hpp"

namespace tunnelsplit {

// Explicit ground-state chain: separatrix area S0, the energy constant
// epsilon, action S(E) and period T(E) near the separatrix, the level
// splitting and both levels, and the instanton flipping rate.
struct SemiclassicalReport {
    double s0 = 0.0;
    double epsilon = 0.0;
    double e_ground_ref = 0.0;  // hbar*omega/2
    double s_action = 0.0;      // S at E = hbar*omega/2
    double period = 0.0;        // T at E = hbar*omega/2
    double delta_e = 0.0;
    double e_minus = 0.0;
    double e_plus = 0.0;
    double flip_rate = 0.0;  // delta_e / (2 pi hbar)
};

// Quarter-orbit time bookkeeping. The individually divergent separatrix
// traversal times are never represented; only their finite difference
// (the time defect) is.
struct TimeBudget {
    double q_match = 0.0;            // Q with m w^2 Q^2 / 2 = hbar w / 2
    double t1_leading = 0.0;         // (1/w) ln(2P / sqrt(m w hbar))
    double t1_exact_harmonic = 0.0;  // (1/w) asinh(P / (m w Q))
    double defect = 0.0;             // t2sep - t1sep
    double period_eq7 = 0.0;         // 4 (t1_leading + defect)
};

// Herring-route splitting from the single-well WKB tail.
struct WkbTail {
    double norm_sq = 0.0;          // m w / (hbar sqrt(4 pi e))
    double k_integral = 0.0;       // int k(q) dq, matching point to barrier center
    double delta_e_herring = 0.0;  // 2 (hbar^2/m) norm_sq exp(-2 k_integral)
};

// Lower limit of the Herring k-integral: the harmonic matching length Q
// from the well minimum (integrand clamped to zero where V < hbar*w/2),
// or the true turning point where V = hbar*w/2. Identical whenever the
// potential sits below its harmonic approximation between the two.
enum class WkbMatchPoint { harmonic_length, turning_point };

// S0 = 2 int_{-a}^{a} sqrt(2 m V) dq  (square-root zeros at both ends).
double separatrix_area(const PotentialProfile& p, const QuadratureConfig& cfg = {});

// t2sep - t1sep: int_0^P (m/p) (|dq/dp|_sep - 1/(m w)) dp, evaluated in
// the q-parametrization as int_0^a (m/p(q) - |V'(q)|/(2 w V(q))) dq.
double time_defect(const PotentialProfile& p, const QuadratureConfig& cfg = {});

// epsilon = (2 P^2 / m) exp(2 w (t2sep - t1sep)).
double epsilon_constant(const PotentialProfile& p, const QuadratureConfig& cfg = {});

// S(E) = S0 + (2E/w) (ln(E/epsilon) - 1): the antiderivative of
// T = -dS/dE with S(0) = S0. Requires 0 < E < v_max.
double action_S(const PotentialProfile& p, double energy, const QuadratureConfig& cfg = {});

// T(E) = -(2/w) ln(E/epsilon). Requires 0 < E < epsilon.
double period_T(const PotentialProfile& p, double energy, const QuadratureConfig& cfg = {});

TimeBudget time_budget(const PotentialProfile& p, const QuadratureConfig& cfg = {});

SemiclassicalReport ground_splitting(const PotentialProfile& p, const QuadratureConfig& cfg = {});

WkbTail splitting_wkb_direct(const PotentialProfile& p,
                             WkbMatchPoint match = WkbMatchPoint::harmonic_length,
                             const QuadratureConfig& cfg = {});

}  // namespace tunnelsplit

#endif
