// tunnelsplit: analyze | verify | sweep for symmetric double-well
// ground-state splitting, with a built-in brute-force cross-check.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/semiclassical.hpp"

namespace ts = tunnelsplit;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fixed float formatting: splittings span many orders of magnitude.
std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

struct Options {
    std::string potential;
    double hbar = 1.0;
    double mass = 1.0;
    std::string format = "table";
    double tol_quad = 1e-10;
    int grid_points = 4096;
    int refinement_levels = 3;
    double box_half_width = 0.0;
    std::string wkb_match = "harmonic";
    std::string sweep_param = "hbar";
    std::vector<double> sweep_values;
};

struct Json {
    std::ostringstream out;
    int depth = 0;
    bool first = true;

    void indent() {
        for (int i = 0; i < depth; ++i) out << "  ";
    }
    void sep() {
        if (!first) out << ",";
        out << "\n";
        first = false;
    }
    void open(const std::string& key = "") {
        sep();
        indent();
        if (!key.empty()) out << '"' << key << "\": ";
        out << "{";
        ++depth;
        first = true;
    }
    void close() {
        out << "\n";
        --depth;
        indent();
        out << "}";
        first = false;
    }
    void field(const std::string& key, double v) {
        sep();
        indent();
        out << '"' << key << "\": " << fmt(v);
    }
    void field(const std::string& key, const std::string& v) {
        sep();
        indent();
        out << '"' << key << "\": \"" << v << '"';
    }
    void field(const std::string& key, bool v) {
        sep();
        indent();
        out << '"' << key << "\": " << (v ? "true" : "false");
    }
    std::string str() { return out.str() + "\n"; }
};

struct Analysis {
    ts::PotentialProfile profile;
    ts::TimeBudget budget;
    ts::SemiclassicalReport semi;
    ts::WkbTail wkb;
};

Analysis analyze(const Options& opt) {
    const ts::Expression expr = ts::Expression::parse(opt.potential);
    const ts::PhysicalContext ctx{opt.mass, opt.hbar};
    ts::QuadratureConfig qcfg;
    qcfg.rel_tol = opt.tol_quad;
    const auto match = opt.wkb_match == "turning" ? ts::WkbMatchPoint::turning_point
                                                  : ts::WkbMatchPoint::harmonic_length;
    const ts::PotentialProfile profile = ts::analyze_profile(expr, ctx);
    // splitting first: a too-low barrier should be named as such, not as
    // the matching-length failure it also implies
    ts::SemiclassicalReport semi = ts::ground_splitting(profile, qcfg);
    ts::TimeBudget budget = ts::time_budget(profile, qcfg);
    ts::WkbTail wkb = ts::splitting_wkb_direct(profile, match, qcfg);
    return Analysis{profile, budget, semi, wkb};
}

void emit_input(Json& j, const Options& opt) {
    j.open("input");
    j.field("potential", opt.potential);
    j.field("mass", opt.mass);
    j.field("hbar", opt.hbar);
    j.close();
}

void emit_profile(Json& j, const ts::PotentialProfile& p) {
    j.open("profile");
    j.field("shift", p.shift);
    j.field("a", p.a);
    j.field("v_max", p.v_max);
    j.field("d2_at_well", p.d2_at_well);
    j.field("omega", p.omega);
    j.field("p_central", p.p_central);
    j.close();
}

int run_analyze(const Options& opt) {
    const Analysis an = analyze(opt);
    if (opt.format == "json") {
        Json j;
        j.open();
        emit_input(j, opt);
        emit_profile(j, an.profile);
        j.open("time_budget");
        j.field("q_match", an.budget.q_match);
        j.field("t1_leading", an.budget.t1_leading);
        j.field("t1_exact_harmonic", an.budget.t1_exact_harmonic);
        j.field("defect", an.budget.defect);
        j.field("period_eq7", an.budget.period_eq7);
        j.close();
        j.open("semiclassical");
        j.field("s0", an.semi.s0);
        j.field("epsilon", an.semi.epsilon);
        j.field("e_ground_ref", an.semi.e_ground_ref);
        j.field("s_action", an.semi.s_action);
        j.field("period", an.semi.period);
        j.field("delta_e", an.semi.delta_e);
        j.field("e_minus", an.semi.e_minus);
        j.field("e_plus", an.semi.e_plus);
        j.field("flip_rate", an.semi.flip_rate);
        j.close();
        j.open("wkb_tail");
        j.field("norm_sq", an.wkb.norm_sq);
        j.field("k_integral", an.wkb.k_integral);
        j.field("delta_e_herring", an.wkb.delta_e_herring);
        j.close();
        j.close();
        std::cout << j.str();
        return 0;
    }
    auto line = [](const char* k, double v) { std::printf("  %-20s %s\n", k, fmt(v).c_str()); };
    std::printf("potential %s  (m=%g, hbar=%g)\n", opt.potential.c_str(), opt.mass, opt.hbar);
    std::printf("profile\n");
    line("shift", an.profile.shift);
    line("a", an.profile.a);
    line("v_max", an.profile.v_max);
    line("d2_at_well", an.profile.d2_at_well);
    line("omega", an.profile.omega);
    line("p_central", an.profile.p_central);
    std::printf("time budget\n");
    line("q_match", an.budget.q_match);
    line("t1_leading", an.budget.t1_leading);
    line("t1_exact_harmonic", an.budget.t1_exact_harmonic);
    line("defect", an.budget.defect);
    line("period_eq7", an.budget.period_eq7);
    std::printf("semiclassical\n");
    line("s0", an.semi.s0);
    line("epsilon", an.semi.epsilon);
    line("e_ground_ref", an.semi.e_ground_ref);
    line("s_action", an.semi.s_action);
    line("period", an.semi.period);
    line("delta_e", an.semi.delta_e);
    line("e_minus", an.semi.e_minus);
    line("e_plus", an.semi.e_plus);
    line("flip_rate", an.semi.flip_rate);
    std::printf("wkb tail\n");
    line("norm_sq", an.wkb.norm_sq);
    line("k_integral", an.wkb.k_integral);
    line("delta_e_herring", an.wkb.delta_e_herring);
    return 0;
}

struct Check {
    std::string name;
    double value;
    bool pass;
};

int run_verify(const Options& opt) {
    const Analysis an = analyze(opt);
    ts::GridConfig grid;
    grid.n_points = opt.grid_points;
    grid.refinement_levels = opt.refinement_levels;
    grid.box_half_width = opt.box_half_width;

    const double v_max = an.profile.v_max;
    const std::vector<double> energies{1e-2 * v_max, 1e-3 * v_max, 1e-4 * v_max};
    const ts::OracleReport oracle = ts::run_oracle(an.profile, grid, energies);

    // tolerances (also emitted, so each report is self-describing)
    const double tol_eps_fit = 1e-2;
    const double ratio_lo = 0.75, ratio_hi = 1.25;
    const double herring_lo = 0.8, herring_hi = 1.2;
    const double tol_eq2 = 5e-2;
    const double tol_key_fact = 1e-3;
    const double tol_eq7 = 1e-10;
    const double tol_equiv = 1e-12;

    const double ratio_semi_exact = an.semi.delta_e / oracle.delta_e_exact;
    const double ratio_herring_semi = an.wkb.delta_e_herring / an.semi.delta_e;
    const double eps_fit_rel = std::fabs(oracle.epsilon_fit / an.semi.epsilon - 1.0);

    std::vector<double> eq2_residuals;
    for (const auto& [e, s] : oracle.s_exact_samples) {
        const double model =
            an.semi.s0 + (2.0 * e / an.profile.omega) * (std::log(e / an.semi.epsilon) - 1.0);
        eq2_residuals.push_back(std::fabs(s - model) / e);
    }
    bool eq2_monotone = true;
    for (std::size_t i = 1; i < eq2_residuals.size(); ++i)
        eq2_monotone = eq2_monotone && eq2_residuals[i] < eq2_residuals[i - 1];

    std::vector<double> gaps;
    for (const auto& [e, diff] : oracle.quarter_defect_samples)
        gaps.push_back(std::fabs(diff - an.budget.defect));
    bool gaps_monotone = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        gaps_monotone = gaps_monotone && gaps[i] < gaps[i - 1];

    const double eq7_rel = std::fabs(an.budget.period_eq7 / an.semi.period - 1.0);
    const double delta_alt = std::sqrt(2.0 * an.semi.epsilon * opt.hbar * an.profile.omega / kPi) *
                             std::exp(-an.semi.s0 / (2.0 * opt.hbar));
    const double equiv_rel = std::fabs(delta_alt / an.semi.delta_e - 1.0);

    std::vector<Check> checks{
        {"epsilon_fit_agrees", eps_fit_rel, eps_fit_rel < tol_eps_fit},
        {"delta_ratio_semi_exact", ratio_semi_exact,
         ratio_semi_exact > ratio_lo && ratio_semi_exact < ratio_hi},
        {"herring_ratio", ratio_herring_semi,
         ratio_herring_semi > herring_lo && ratio_herring_semi < herring_hi},
        {"eq2_residual", eq2_residuals.back(), eq2_monotone && eq2_residuals.back() < tol_eq2},
        {"key_fact_gap", gaps.back(), gaps_monotone && gaps.back() < tol_key_fact},
        {"eq7_identity", eq7_rel, eq7_rel < tol_eq7},
        {"delta_e_equivalence", equiv_rel, equiv_rel < tol_equiv},
    };
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;

    if (opt.format == "json") {
        Json j;
        j.open();
        emit_input(j, opt);
        j.open("tolerances");
        j.field("epsilon_fit_rel", tol_eps_fit);
        j.field("delta_ratio_lo", ratio_lo);
        j.field("delta_ratio_hi", ratio_hi);
        j.field("herring_ratio_lo", herring_lo);
        j.field("herring_ratio_hi", herring_hi);
        j.field("eq2_residual_max", tol_eq2);
        j.field("key_fact_gap_max", tol_key_fact);
        j.field("eq7_identity_rel", tol_eq7);
        j.field("delta_equiv_rel", tol_equiv);
        j.close();
        j.open("values");
        j.field("delta_e_semiclassical", an.semi.delta_e);
        j.field("delta_e_herring", an.wkb.delta_e_herring);
        j.field("delta_e_exact", oracle.delta_e_exact);
        j.field("eigen_error_bar", oracle.eigen_error_bar);
        j.field("e0", oracle.e0);
        j.field("e1", oracle.e1);
        j.field("ratio_semi_exact", ratio_semi_exact);
        j.field("ratio_herring_semi", ratio_herring_semi);
        j.field("epsilon", an.semi.epsilon);
        j.field("epsilon_fit", oracle.epsilon_fit);
        j.close();
        j.open("checks");
        for (const auto& c : checks) j.field(c.name, std::string(c.pass ? "pass" : "fail"));
        j.close();
        j.field("pass", all_pass);
        j.close();
        std::cout << j.str();
    } else if (opt.format == "csv") {
        std::cout << "check,value,pass\n";
        for (const auto& c : checks)
            std::cout << c.name << "," << fmt(c.value) << "," << (c.pass ? "pass" : "fail")
                      << "\n";
    } else {
        std::printf("%-28s %-22s %s\n", "check", "value", "result");
        for (const auto& c : checks)
            std::printf("%-28s %-22s %s\n", c.name.c_str(), fmt(c.value).c_str(),
                        c.pass ? "pass" : "fail");
        std::printf("delta_e: semiclassical %s  herring %s  exact %s (+- %s)\n",
                    fmt(an.semi.delta_e).c_str(), fmt(an.wkb.delta_e_herring).c_str(),
                    fmt(oracle.delta_e_exact).c_str(), fmt(oracle.eigen_error_bar).c_str());
        std::printf("epsilon: explicit %s  fit %s\n", fmt(an.semi.epsilon).c_str(),
                    fmt(oracle.epsilon_fit).c_str());
    }
    return all_pass ? 0 : 3;
}

int run_sweep(const Options& opt) {
    if (opt.sweep_values.empty()) throw ts::Error("sweep requires --sweep-values");
    std::cout << "param,omega,P,S0,epsilon,S,delta_e_semi,delta_e_herring,delta_e_exact,"
                 "ratio_semi_exact,flip_rate,error\n";
    for (double value : opt.sweep_values) {
        try {
            Options row = opt;
            if (opt.sweep_param == "hbar") {
                if (!(value > 0.0)) throw ts::Error("hbar>0 required");
                row.hbar = value;
            } else if (opt.sweep_param == "scale") {
                if (!(value > 0.0)) throw ts::Error("scale>0 required");
                row.potential = "(" + fmt(value) + ")*(" + opt.potential + ")";
            } else {
                throw ts::Error("unknown sweep parameter '" + opt.sweep_param + "'");
            }
            const Analysis an = analyze(row);
            ts::GridConfig grid;
            grid.n_points = row.grid_points;
            grid.refinement_levels = row.refinement_levels;
            grid.box_half_width = row.box_half_width;
            const ts::EigenSplitting eig = ts::eigen_splitting(an.profile, grid);
            std::cout << fmt(value) << "," << fmt(an.profile.omega) << ","
                      << fmt(an.profile.p_central) << "," << fmt(an.semi.s0) << ","
                      << fmt(an.semi.epsilon) << "," << fmt(an.semi.s_action) << ","
                      << fmt(an.semi.delta_e) << "," << fmt(an.wkb.delta_e_herring) << ","
                      << fmt(eig.delta_e) << "," << fmt(an.semi.delta_e / eig.delta_e) << ","
                      << fmt(an.semi.flip_rate) << ",\n";
        } catch (const ts::Error& e) {
            std::string msg = e.what();
            for (char& c : msg)
                if (c == ',' || c == '\n') c = ';';
            std::cout << fmt(value) << ",,,,,,,,,,," << msg << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit semiclassical double-well ground-state splitting"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("expression", opt.potential, "potential V(q)");
        sub->add_option("--potential", opt.potential, "potential V(q)");
        sub->add_option("--hbar", opt.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
        sub->add_option("--mass", opt.mass, "particle mass")->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--tol-quad", opt.tol_quad, "quadrature relative tolerance");
        sub->add_option("--grid-points", opt.grid_points, "eigensolver grid intervals");
        sub->add_option("--refinement-levels", opt.refinement_levels, "Richardson levels");
        sub->add_option("--box-half-width", opt.box_half_width, "eigensolver box half-width");
        sub->add_option("--wkb-match", opt.wkb_match, "harmonic|turning")
            ->check(CLI::IsMember({"harmonic", "turning"}));
    };
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "semiclassical chain only");
    add_common(cmd_analyze);
    CLI::App* cmd_verify = app.add_subcommand("verify", "semiclassical vs brute-force oracle");
    add_common(cmd_verify);
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "CSV over a parameter sweep");
    add_common(cmd_sweep);
    cmd_sweep->add_option("--sweep-param", opt.sweep_param, "hbar|scale")
        ->check(CLI::IsMember({"hbar", "scale"}));
    cmd_sweep->add_option("--sweep-values", opt.sweep_values, "comma-separated values")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (opt.potential.empty()) throw ts::Error("a potential expression is required");
        if (cmd_analyze->parsed()) return run_analyze(opt);
        if (cmd_verify->parsed()) return run_verify(opt);
        return run_sweep(opt);
    } catch (const ts::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
