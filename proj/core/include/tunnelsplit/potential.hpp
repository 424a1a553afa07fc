#ifndef TUNNELSPLIT_POTENTIAL_HPP
#define TUNNELSPLIT_POTENTIAL_HPP

#include "tunnelsplit/expression.hpp"

namespace tunnelsplit {

// Unit system: mass and hbar fix everything downstream.
struct PhysicalContext {
    double mass = 1.0;
    double hbar = 1.0;
};

struct AnalysisOptions {
    double q_search_max = 10.0;  // well search interval (0, q_search_max)
    int scan_points = 256;       // V' sign-change scan resolution
    int symmetry_points = 64;    // Chebyshev-spaced symmetry samples
    double tol_zero = 1e-9;      // |V(a)| after shifting
    double tol_root = 1e-9;      // |V'(a)|
    double tol_sym = 1e-10;      // relative V(q) vs V(-q)
};

// Analyzed symmetric double well. The well minima sit at +-a with V = 0
// there (`shift` records the offset subtracted to arrange that), the
// single barrier maximum v_max sits at q = 0.
//
// Evaluation is symmetrized: value/derivatives are taken at |q| with the
// first derivative sign-flipped for q < 0. Symmetry of the input is
// validated by analyze_profile, so this only removes rounding-level
// asymmetry -- and it lets every downstream integral work on q >= 0.
struct PotentialProfile {
    Expression expr;
    PhysicalContext ctx;
    double shift = 0.0;
    double a = 0.0;           // right well minimum
    double v_max = 0.0;       // barrier height after shifting
    double d2_at_well = 0.0;  // V''(a)
    double omega = 0.0;       // sqrt(V''(a) / mass)
    double p_central = 0.0;   // P = sqrt(2 m v_max)

    double value(double q) const;
    Dual2 derivatives(double q) const;  // (V, V', V'') shifted, symmetrized
};

// Validates shape and symmetry and fills the profile. Throws
// NotDoubleWellError / AsymmetricPotentialError / MultipleBarriersError.
PotentialProfile analyze_profile(const Expression& expr, const PhysicalContext& ctx,
                                 const AnalysisOptions& opts = {});

}  // namespace tunnelsplit

#endif
