#ifndef TUNNELSPLIT_ORACLE_HPP
#define TUNNELSPLIT_ORACLE_HPP

#include <span>
#include <utility>
#include <vector>

#include "tunnelsplit/potential.hpp"
#include "tunnelsplit/quadrature.hpp"

namespace tunnelsplit {

struct GridConfig {
    double box_half_width = 0.0;  // 0: auto, a + 6 sqrt(hbar / (m omega))
    int n_points = 4096;          // grid intervals at the coarsest level
    int refinement_levels = 3;    // Richardson doublings
};

struct EigenSplitting {
    double e0 = 0.0;
    double e1 = 0.0;
    double delta_e = 0.0;    // Richardson-extrapolated e1 - e0
    double error_bar = 0.0;  // disagreement between the two extrapolation routes
};

// Lowest two Dirichlet eigenvalues of -(hbar^2/2m) d^2/dq^2 + V by
// second-order central differences; individual eigenvalues located by
// Sturm-sequence bisection to machine-level brackets, then Richardson
// extrapolated across grid doublings. delta_e is computed both as the
// difference of extrapolated levels and as the extrapolated difference;
// the discrepancy feeds the error bar. Throws BoxTooSmallError /
// NoSeparationError.
EigenSplitting eigen_splitting(const PotentialProfile& p, const GridConfig& grid = {});

// Eigenvector by tridiagonal inverse iteration at the given energy, on
// the coarsest grid of `grid`. Used for parity checks.
std::vector<double> eigenvector_on_grid(const PotentialProfile& p, const GridConfig& grid,
                                        double energy);

// S_exact(E) = 2 int over the barrier interval [-q_t, q_t] of
// sqrt(2m (V - E)) dq, with q_t the root of V = E in (0, a).
double action_exact(const PotentialProfile& p, double energy);

// T_exact(E) = sqrt(2m) int_{-q_t}^{q_t} dq / sqrt(V - E).
double period_exact(const PotentialProfile& p, double energy);

// Quarter period: turning point to barrier center. Equals T_exact / 4.
double quarter_time_exact(const PotentialProfile& p, double energy);

struct EpsilonFit {
    double value = 0.0;
    bool converged = false;
    double diagnostic = 0.0;  // |eps_fit - eps(last sample)| / eps_fit
    std::vector<std::pair<double, double>> samples;  // (E, eps_k)
};

// Inverts T = -(2/w) ln(E/eps): eps_k = E_k exp(w T_exact(E_k) / 2),
// extrapolated to E -> 0 with an {1, E ln E, E} residual model.
// Throws NotConvergingError when the samples do not settle.
EpsilonFit fit_epsilon(const PotentialProfile& p, std::span<const double> energies);

struct OracleReport {
    double e0 = 0.0;
    double e1 = 0.0;
    double delta_e_exact = 0.0;
    double eigen_error_bar = 0.0;
    double epsilon_fit = 0.0;
    bool epsilon_fit_converged = false;
    std::vector<std::pair<double, double>> s_exact_samples;
    std::vector<std::pair<double, double>> t_exact_samples;
    std::vector<std::pair<double, double>> quarter_defect_samples;  // (E, t2 - t1_exact)
};

OracleReport run_oracle(const PotentialProfile& p, const GridConfig& grid,
                        std::span<const double> energies);

}  // namespace tunnelsplit

#endif
