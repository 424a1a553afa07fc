// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on
// any failure. Every threshold is pinned here on purpose — this binary
// is the contract for the semiclassical chain and its oracles.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/semiclassical.hpp"

namespace ts = tunnelsplit;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %-34s  %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

ts::PotentialProfile profile_of(const char* text, double hbar = 1.0) {
    return ts::analyze_profile(ts::Expression::parse(text), ts::PhysicalContext{1.0, hbar});
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

// Complete elliptic integrals K(k), E(k) by the arithmetic-geometric
// mean, independent of everything in the library.
void elliptic_ke(double k, double& bigk, double& bige) {
    double a = 1.0, b = std::sqrt(1.0 - k * k), c = k;
    double sum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int i = 0; i < 60 && std::fabs(c) > 1e-18; ++i) {
        c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    bigk = M_PI / (2.0 * a);
    bige = bigk * (1.0 - sum);
}

void criterion_1() {
    // Quartic epsilon closed form: defect (ln 2)/sqrt(2) gives exactly 64.
    const double eps = ts::epsilon_constant(profile_of("(q^2-1)^2"));
    const double rel = std::fabs(eps / 64.0 - 1.0);
    report(1, "quartic epsilon closed form", rel < 1e-6, "epsilon=" + fmt(eps));
}

void criterion_2() {
    const std::vector<double> energies{1e-2, 1e-3, 1e-4};
    bool pass = true;
    std::string detail;
    for (const char* text : {"(q^2-1)^2", "(q^2-1)^2*(1+q^2/2)"}) {
        const auto p = profile_of(text);
        const double eps = ts::epsilon_constant(p);
        const auto fit = ts::fit_epsilon(p, energies);
        const double rel = std::fabs(fit.value / eps - 1.0);
        pass = pass && fit.converged && rel < 1e-2;
        if (!detail.empty()) detail += "  ";
        detail += std::string(text) + ": rel=" + fmt(rel);
    }
    report(2, "epsilon fit from exact periods", pass, detail);
}

void criterion_3() {
    // Frozen regression ratios for the unit quartic.
    const double frozen[] = {1.22251, 1.12809};
    const double hbars[] = {0.3, 0.2};
    bool pass = true;
    std::string detail;
    double prev_dev = 1e300;
    for (int i = 0; i < 2; ++i) {
        const auto p = profile_of("(q^2-1)^2", hbars[i]);
        const auto semi = ts::ground_splitting(p);
        const auto eig = ts::eigen_splitting(p);
        const double ratio = semi.delta_e / eig.delta_e;
        const double dev = std::fabs(semi.delta_e - eig.delta_e);
        pass = pass && ratio > 0.75 && ratio < 1.25;
        pass = pass && dev > 10.0 * eig.error_bar;
        pass = pass && std::fabs(ratio - frozen[i]) < 1e-3;
        pass = pass && std::fabs(ratio - 1.0) < std::fabs(prev_dev);
        prev_dev = ratio - 1.0;
        if (!detail.empty()) detail += "  ";
        detail += "hbar=" + fmt(hbars[i]) + ": ratio=" + fmt(ratio);
    }
    report(3, "splitting vs exact spectrum", pass, detail);
}

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (const char* text : {"(q^2-1)^2", "(q^2-4)^2", "(q^2-1)^2*(1+q^2/2)"}) {
        const auto p = profile_of(text, 0.2);
        const auto semi = ts::ground_splitting(p);
        const auto tb = ts::time_budget(p);
        const double rel = std::fabs(tb.period_eq7 / semi.period - 1.0);
        pass = pass && rel < 1e-10;
        if (!detail.empty()) detail += "  ";
        detail += "rel=" + fmt(rel);
    }
    report(4, "assembled period identity", pass, detail);
}

void criterion_5() {
    const auto p = profile_of("(q^2-1)^2");
    const double defect = ts::time_defect(p);
    const double m = 1.0, w = p.omega, P = p.p_central;
    std::vector<double> gaps;
    for (double e : {1e-2, 1e-3, 1e-4}) {
        const double q_e = std::sqrt(2.0 * e / m) / w;
        const double t1 = std::asinh(P / (m * w * q_e)) / w;
        const double t2 = ts::quarter_time_exact(p, e);
        gaps.push_back(std::fabs(t2 - t1 - defect));
    }
    const bool pass = strictly_decreasing(gaps) && gaps.back() < 1e-3;
    report(5, "quarter-turn time decomposition", pass,
           "gaps=" + fmt(gaps[0]) + "," + fmt(gaps[1]) + "," + fmt(gaps[2]));
}

void criterion_6() {
    const auto p = profile_of("(q^2-1)^2");
    const double s0 = ts::separatrix_area(p);
    const double eps = ts::epsilon_constant(p);
    std::vector<double> residuals;
    for (double e : {1e-2, 1e-3, 1e-4}) {
        const double model = s0 + (2.0 * e / p.omega) * (std::log(e / eps) - 1.0);
        residuals.push_back(std::fabs(ts::action_exact(p, e) - model) / e);
    }
    const bool pass = strictly_decreasing(residuals) && residuals.back() < 5e-2;
    report(6, "near-separatrix action residual", pass,
           "residual/E=" + fmt(residuals[0]) + "," + fmt(residuals[1]) + "," +
               fmt(residuals[2]));
}

void criterion_7() {
    // Frozen final ratio 1.02302 at hbar = 0.1.
    std::vector<double> ratios;
    for (double hbar : {0.4, 0.3, 0.2, 0.1}) {
        const auto p = profile_of("(q^2-1)^2", hbar);
        ratios.push_back(ts::splitting_wkb_direct(p).delta_e_herring /
                         ts::ground_splitting(p).delta_e);
    }
    std::vector<double> devs;
    for (double r : ratios) devs.push_back(std::fabs(r - 1.0));
    const bool pass =
        strictly_decreasing(devs) && std::fabs(ratios.back() - 1.02302) < 1e-3;
    report(7, "herring-route convergence", pass,
           "ratios=" + fmt(ratios[0]) + "," + fmt(ratios[1]) + "," + fmt(ratios[2]) + "," +
               fmt(ratios[3]));
}

void criterion_8() {
    const ts::PotentialProfile harmonic{ts::Expression::parse("0.5*q^2"),
                                        ts::PhysicalContext{1.0, 1.0},
                                        0.0, 0.0, 0.0, 1.0, 1.0, 0.0};
    const auto eig = ts::eigen_splitting(harmonic);
    const bool pass = std::fabs(eig.e0 - 0.5) < 1e-8 && std::fabs(eig.e1 - 1.5) < 1e-8;
    report(8, "harmonic eigensolver sanity", pass,
           "e0=" + fmt(eig.e0) + " e1=" + fmt(eig.e1));
}

void criterion_9() {
    // For the unit quartic the barrier integral has a closed form in
    // complete elliptic integrals:
    //   b^2 = 1 - sqrt(E), c^2 = 1 + sqrt(E), k^2 = b^2/c^2,
    //   S(E) = (4 sqrt 2 / 3) c^3 [(1 + k^2) E(k) - (1 - k^2) K(k)].
    const auto p = profile_of("(q^2-1)^2");
    const double e = 0.5;
    const double c2 = 1.0 + std::sqrt(e), b2 = 1.0 - std::sqrt(e);
    const double k = std::sqrt(b2 / c2);
    double bigk = 0.0, bige = 0.0;
    elliptic_ke(k, bigk, bige);
    const double closed = 4.0 * std::sqrt(2.0) * std::pow(c2, 1.5) *
                          ((1.0 + k * k) * bige - (1.0 - k * k) * bigk) / 3.0;
    const double numeric = ts::action_exact(p, e);
    const double rel = std::fabs(numeric / closed - 1.0);
    report(9, "elliptic closed-form cross-check", rel < 1e-8,
           "numeric=" + fmt(numeric) + " closed=" + fmt(closed));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 9 criteria passed\n");
    return 0;
}
