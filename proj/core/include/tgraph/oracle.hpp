#pragma once

#include <optional>
#include <vector>

#include "tgraph/solve.hpp"

namespace tgraph {

// Fixed-step RK4 for u'' = u - |u|^{p-2} u (lambda = 1). Independent of the quadrature pipeline.
struct ShootingResult {
    EdgeProfile profile;                       // every `record_every`-th step
    std::optional<double> first_critical_x;    // first sign change of u'
    std::optional<double> first_zero_x;        // first sign change of u
    bool sign_changed = false;
    double hamiltonian_drift = 0.0;
    bool drift_warning = false;                // drift above 1e-6
    double u_end = 0.0;
    double du_end = 0.0;
};

enum class ShootStop { none, critical, zero, either };

struct ShootOptions {
    ShootStop stop = ShootStop::none;
    int record_every = 0;  // 0 picks a stride giving about 2000 profile samples
};

inline constexpr double kOracleStepsPerUnit = 2e4;

ShootingResult rk_shoot(double p, double u0, double du0, double x_max, long steps, const ShootOptions& opts = {});
// Steps for x_max at the default density.
long default_steps(double x_max);

struct VerifyReport {
    double shoot_residual = 0.0;       // |u3'(ell)| after re-shooting e3 from the vertex data
    double kirchhoff_residual = 0.0;   // |u1'(0) + u2'(0) + u3'(0)|
    double continuity_residual = 0.0;  // max |u_i(0) - u3(0)|
    double level_drift = 0.0;          // along the reconstructed e3 profile
    double ode_residual_max = 0.0;     // finite-difference residual on reconstructed profiles
    bool pass = false;
};

// All residuals are measured in normalized (lambda = 1) units.
VerifyReport verify_state(const BoundState& state, double tol);

// For each y < 0: does the shot from (phi(y), -2 phi'(y)) change sign before u' vanishes?
std::vector<bool> scan_type_b(double p, const std::vector<double>& y_grid);

// Finite-difference weights (Fornberg) for the m-th derivative at x0 on arbitrary nodes.
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int m);

}  // namespace tgraph
