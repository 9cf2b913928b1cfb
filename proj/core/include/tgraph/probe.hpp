#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tgraph/core_math.hpp"

namespace tgraph {

// Ground state read along the terminal edge (from the tip) and then the half-line.
struct UnfoldedProfile {
    std::vector<double> xs;
    std::vector<double> psi;
    std::vector<double> dpsi;
    double ell = 0.0;
};

enum class Regime { large_ell, small_ell };
enum class Cutoff { bump, cosine };

std::string to_string(Regime r);
std::string to_string(Cutoff c);

struct PathSpec {
    Regime regime = Regime::large_ell;
    double eps = 0.0;  // cutoff half-width; 0 means ell^-2 (normalized units)
    Cutoff cutoff = Cutoff::bump;
    double h = 1e-3;   // finite-difference step in t
};

struct ProbeReport {
    Params params;
    Regime regime = Regime::large_ell;
    Cutoff cutoff = Cutoff::bump;
    double eps = 0.0;
    double h = 0.0;
    double second_derivative_fd = 0.0;    // 5-point stencil, step h
    double second_derivative_half = 0.0;  // same with h/2
    double second_derivative_richardson = 0.0;
    double first_derivative = 0.0;        // central difference, step h
    double asymptotic_prediction = 0.0;
    double relative_gap = 0.0;
    double p_moment = 0.0;                // int_0^ell psi^p (large) or int_R phi^p (small)
    double energy_at_one = 0.0;
    double ground_state_energy = 0.0;
    double mass = 0.0;
    double mass_drift = 0.0;
    std::vector<std::pair<double, double>> energies;  // (t, E)
    std::string verdict;
};

struct AsymptoticIngredients {
    double grad_sq_edge = 0.0;
    double p_moment_edge = 0.0;
    double pohozaev_residual = 0.0;  // grad - (p-2)/(2p) * p-moment
};

// c(s) and c'(s) of the admissible cutoffs: c(0) = 1, c'(0) = 0, support [-1, 1].
double cutoff_value(Cutoff c, double s);
double cutoff_slope(Cutoff c, double s);

UnfoldedProfile build_unfolded(const Params& params, int n_samples);
double path_energy(const Params& params, const PathSpec& spec, double t);
ProbeReport second_derivative(const Params& params, const PathSpec& spec);
AsymptoticIngredients asymptotic_ingredients(const Params& params);
// int phi'^2 - (p-2)/(2p) int phi^p over the line
double soliton_pohozaev_defect(double p);
// ell^2 psi(ell - eps)^p / eps with eps = ell^-2 (normalized units)
double boundary_term(double p, double ell);
// -(1/p)(p/2 - 1)((p - 6)/2)
double prediction_factor(double p);

}  // namespace tgraph
