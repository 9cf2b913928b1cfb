#pragma once

#include <string>
#include <vector>

namespace tgraph {

struct GridReport {
    std::string claim_id;
    std::string grid_spec;
    double p = 0.0;
    double worst_value = 0.0;
    std::vector<double> worst_point;
    bool pass = false;
};

inline constexpr double kTolSign = 1e-12;

double h_function(double p, double x);
double psi_function(double p, double z, double x);
// f''-perturbation lets the harness corrupt the formula on purpose.
double g_function(double p, double t, double f2_perturbation = 0.0);
double z_star(double p);  // zero of f''
double t_star(double p);

std::vector<double> uniform_grid(double lo, double hi, int n);

GridReport check_h(double p, const std::vector<double>& x_grid);
// x runs over nx points of [z, 3 zmax] for each z
GridReport check_claim_psi(double p, const std::vector<double>& z_grid, int nx);
GridReport check_claim_g(double p, const std::vector<double>& t_grid, double f2_perturbation = 0.0);
GridReport check_length_derivative_sign(double p, const std::vector<double>& z_grid);
// companion check: the type-A length is decreasing
GridReport check_length_A_slope(double p, const std::vector<double>& z_grid);

struct ClaimsConfig {
    int density = 200;
    double f2_perturbation = 0.0;
    int threads = 0;
};

// Default grids for every claim at one exponent.
std::vector<GridReport> run_claims(double p, const ClaimsConfig& cfg);

}  // namespace tgraph
