#include "tunnelsplit/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace tunnelsplit {

namespace {

// Number of eigenvalues of the tridiagonal operator below lambda,
// by the Sturm sequence of the LDL^T pivots.
int sturm_count(const std::vector<double>& diag, double off_sq, double lambda) {
    int count = 0;
    double d = diag[0] - lambda;
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        d = diag[i] - lambda - off_sq / d;
        if (d == 0.0) d = -std::numeric_limits<double>::min();
        if (d < 0.0) ++count;
    }
    return count;
}

// k-th smallest eigenvalue (0-indexed) by bisection to a machine-level
// bracket.
double sturm_eigenvalue(const std::vector<double>& diag, double off, int k) {
    const double off_sq = off * off;
    double lo = diag[0], hi = diag[0];
    for (double d : diag) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    lo -= 2.0 * std::fabs(off);
    hi += 2.0 * std::fabs(off);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket exhausted in double
        if (sturm_count(diag, off_sq, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

struct Grid {
    double box;
    double h;
    std::vector<double> diag;
    double off;
};

Grid build_grid(const PotentialProfile& p, double box, int intervals) {
    Grid g;
    g.box = box;
    g.h = 2.0 * box / intervals;
    const double kinetic = p.ctx.hbar * p.ctx.hbar / (p.ctx.mass * g.h * g.h);
    g.off = -0.5 * kinetic;
    g.diag.resize(intervals - 1);
    for (int i = 0; i < intervals - 1; ++i) {
        const double q = -box + (i + 1) * g.h;
        g.diag[i] = kinetic + p.value(q);
    }
    return g;
}

double auto_box(const PotentialProfile& p) {
    return p.a + 6.0 / std::sqrt(p.ctx.mass * p.omega / p.ctx.hbar);
}

// One Richardson sweep for a second-order sequence (h halving per level).
double richardson(std::vector<double> v) {
    double factor = 4.0;
    while (v.size() > 1) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            v[i] = (factor * v[i + 1] - v[i]) / (factor - 1.0);
        v.pop_back();
        factor *= 4.0;
    }
    return v[0];
}

}  // namespace

EigenSplitting eigen_splitting(const PotentialProfile& p, const GridConfig& grid) {
    const double box = grid.box_half_width > 0.0 ? grid.box_half_width : auto_box(p);
    if (box <= p.a) throw BoxTooSmallError("box half-width must exceed the well position a");
    const double e1_estimate = 1.5 * p.ctx.hbar * p.omega;
    if (p.value(box) < 10.0 * e1_estimate)
        throw BoxTooSmallError("V at the box edge is below 10x the first excited estimate");
    if (grid.n_points < 64) throw DomainError("n_points must be at least 64");
    if (grid.refinement_levels < 1) throw DomainError("refinement_levels must be at least 1");

    std::vector<double> e0s, e1s, diffs;
    for (int level = 0; level < grid.refinement_levels; ++level) {
        const Grid g = build_grid(p, box, grid.n_points << level);
        const double e0 = sturm_eigenvalue(g.diag, g.off, 0);
        const double e1 = sturm_eigenvalue(g.diag, g.off, 1);
        e0s.push_back(e0);
        e1s.push_back(e1);
        diffs.push_back(e1 - e0);
    }

    EigenSplitting r;
    r.e0 = richardson(e0s);
    r.e1 = richardson(e1s);
    const double delta_via_levels = r.e1 - r.e0;
    const double delta_via_diffs = richardson(diffs);
    r.delta_e = delta_via_diffs;
    r.error_bar = std::fabs(delta_via_levels - delta_via_diffs);
    if (diffs.size() > 1)
        r.error_bar += std::fabs(delta_via_diffs - diffs.back()) /
                       (std::pow(4.0, static_cast<double>(diffs.size() - 1)) - 1.0);
    if (!(r.delta_e > 0.0) || r.delta_e <= 2.0 * r.error_bar)
        throw NoSeparationError("splitting " + std::to_string(r.delta_e) +
                                " is below the numerical noise floor (error bar " +
                                std::to_string(r.error_bar) + ")");
    return r;
}

std::vector<double> eigenvector_on_grid(const PotentialProfile& p, const GridConfig& grid,
                                        double energy) {
    const double box = grid.box_half_width > 0.0 ? grid.box_half_width : auto_box(p);
    const Grid g = build_grid(p, box, grid.n_points);
    const std::size_t n = g.diag.size();

    // Deliberately asymmetric start: a reflection-symmetric seed has no
    // overlap with odd eigenvectors, leaving them reachable only through
    // rounding noise.
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / n;
    // inverse iteration with a partial-pivot tridiagonal solve
    for (int iter = 0; iter < 3; ++iter) {
        std::vector<double> a(n), c(n, 0.0), rhs = v;
        for (std::size_t i = 0; i < n; ++i) a[i] = g.diag[i] - energy;
        std::vector<double> lower(n, g.off), upper(n, g.off);
        lower[0] = 0.0;
        // forward elimination
        for (std::size_t i = 0; i + 1 < n; ++i) {
            double pivot = a[i], below = lower[i + 1];
            if (std::fabs(below) > std::fabs(pivot)) {
                std::swap(a[i], lower[i + 1]);
                std::swap(upper[i], a[i + 1]);
                std::swap(c[i], upper[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
                pivot = a[i];
            }
            if (pivot == 0.0) pivot = std::numeric_limits<double>::min();
            const double mult = lower[i + 1] / pivot;
            a[i + 1] -= mult * upper[i];
            upper[i + 1] -= mult * c[i];
            rhs[i + 1] -= mult * rhs[i];
        }
        // back substitution
        for (std::size_t ii = n; ii-- > 0;) {
            double x = rhs[ii];
            if (ii + 1 < n) x -= upper[ii] * v[ii + 1];
            if (ii + 2 < n) x -= c[ii] * v[ii + 2];
            double pivot = a[ii];
            if (pivot == 0.0) pivot = std::numeric_limits<double>::min();
            v[ii] = x / pivot;
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }
    return v;
}

namespace {

double barrier_turning_point(const PotentialProfile& p, double energy) {
    if (!(energy > 0.0) || !(energy < p.v_max))
        throw EOutOfRangeError("energy must satisfy 0 < E < v_max");
    return find_root([&](double q) { return p.value(q) - energy; }, 0.0, p.a, 1e-14 * p.a);
}

}  // namespace

double action_exact(const PotentialProfile& p, double energy) {
    const double q_t = barrier_turning_point(p, energy);
    const double m = p.ctx.mass;
    auto f = [&](double q) {
        return std::sqrt(std::max(2.0 * m * (p.value(q) - energy), 0.0));
    };
    // 2 int_{-q_t}^{q_t} = 4 int_0^{q_t} by symmetry
    return 4.0 * integrate(f, 0.0, q_t).value;
}

double period_exact(const PotentialProfile& p, double energy) {
    const double q_t = barrier_turning_point(p, energy);
    const double m = p.ctx.mass;
    // The integrand keeps its inverse-square-root endpoint; the floor
    // only stops rounding noise in V - E from going negative right at
    // the turning point.
    const double floor = std::numeric_limits<double>::epsilon() * (energy + p.v_max);
    auto f = [&](double q) {
        return 1.0 / std::sqrt(std::max(p.value(q) - energy, floor));
    };
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-7;  // V - E cancels near q_t; ~1e-8 is the honest floor
    cfg.abs_tol = 1e-9;
    return 2.0 * std::sqrt(2.0 * m) * integrate(f, 0.0, q_t, cfg).value;
}

double quarter_time_exact(const PotentialProfile& p, double energy) {
    return 0.25 * period_exact(p, energy);
}

EpsilonFit fit_epsilon(const PotentialProfile& p, std::span<const double> energies) {
    if (energies.empty()) throw EOutOfRangeError("fit_epsilon requires at least one energy");
    EpsilonFit fit;
    for (double e : energies) {
        const double t = period_exact(p, e);
        fit.samples.emplace_back(e, e * std::exp(0.5 * p.omega * t));
    }
    const std::size_t n = fit.samples.size();
    if (n == 1) {
        fit.value = fit.samples[0].second;
        fit.converged = false;
        fit.diagnostic = 1.0;
        return fit;
    }

    // Least squares of eps_k against {1, E ln E, E} (only {1, E ln E}
    // with two samples), solved via normal equations.
    const std::size_t terms = n >= 3 ? 3 : 2;
    std::array<std::array<double, 3>, 3> ata{};
    std::array<double, 3> atb{};
    for (const auto& [e, ek] : fit.samples) {
        const std::array<double, 3> row{1.0, e * std::log(e), e};
        for (std::size_t i = 0; i < terms; ++i) {
            for (std::size_t j = 0; j < terms; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * ek;
        }
    }
    // Gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < terms; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < terms; ++r)
            if (std::fabs(ata[r][col]) > std::fabs(ata[piv][col])) piv = r;
        std::swap(ata[col], ata[piv]);
        std::swap(atb[col], atb[piv]);
        for (std::size_t r = col + 1; r < terms; ++r) {
            const double mult = ata[r][col] / ata[col][col];
            for (std::size_t cc = col; cc < terms; ++cc) ata[r][cc] -= mult * ata[col][cc];
            atb[r] -= mult * atb[col];
        }
    }
    std::array<double, 3> sol{};
    for (std::size_t ii = terms; ii-- > 0;) {
        double x = atb[ii];
        for (std::size_t jj = ii + 1; jj < terms; ++jj) x -= ata[ii][jj] * sol[jj];
        sol[ii] = x / ata[ii][ii];
    }
    fit.value = sol[0];
    fit.diagnostic = std::fabs(fit.value - fit.samples.back().second) / std::fabs(fit.value);
    if (!std::isfinite(fit.value) || fit.value <= 0.0 || fit.diagnostic > 0.5)
        throw NotConvergingError("epsilon samples are not settling toward a limit");
    fit.converged = true;
    return fit;
}

OracleReport run_oracle(const PotentialProfile& p, const GridConfig& grid,
                        std::span<const double> energies) {
    OracleReport r;
    const EigenSplitting eig = eigen_splitting(p, grid);
    r.e0 = eig.e0;
    r.e1 = eig.e1;
    r.delta_e_exact = eig.delta_e;
    r.eigen_error_bar = eig.error_bar;

    const EpsilonFit fit = fit_epsilon(p, energies);
    r.epsilon_fit = fit.value;
    r.epsilon_fit_converged = fit.converged;

    const double m = p.ctx.mass;
    const double w = p.omega;
    for (double e : energies) {
        r.s_exact_samples.emplace_back(e, action_exact(p, e));
        const double t = period_exact(p, e);
        r.t_exact_samples.emplace_back(e, t);
        const double q_e = std::sqrt(2.0 * e / m) / w;
        const double t1 = std::asinh(p.p_central / (m * w * q_e)) / w;
        r.quarter_defect_samples.emplace_back(e, 0.25 * t - t1);
    }
    return r;
}

}  // namespace tunnelsplit
