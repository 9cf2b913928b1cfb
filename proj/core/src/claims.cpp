#include "tgraph/claims.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tgraph/core_math.hpp"
#include "tgraph/errors.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/parallel.hpp"

namespace tgraph {

namespace {

std::string describe(const char* what, double lo, double hi, std::size_t n) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s in [%.6g, %.6g], %zu points", what, lo, hi, n);
    return buf;
}

}  // namespace

double h_function(double p, double x) { return -2.0 - (p - 1.0) * (p - 6.0) * x - p * (p - 1.0) * x * x; }

double psi_function(double p, double z, double x) {
    const Potential pot(p);
    const double fpx = pot.fprime(x), fpz = pot.fprime(z);
    return -fpx * fpx - 3.0 * fpz * (fpx + (z - x) * pot.derivative(x, 2));
}

double g_function(double p, double t, double f2_perturbation) {
    const Potential pot(p);
    const double f1 = pot.fprime(t);
    const double f2 = pot.derivative(t, 2) + f2_perturbation;
    const double f3 = pot.derivative(t, 3);
    const double df = pot.from_center(t - 1.0);  // f(t) - f(1)
    return -3.0 * f2 * f1 * f1 + 6.0 * df * f2 * f2 - 2.0 * df * f3 * f1;
}

double z_star(double p) { return std::pow(1.0 / (p - 1.0), 1.0 / (p - 2.0)); }

double t_star(double p) { return std::pow((8.0 + p * (2.0 * p - 7.0)) / ((p - 1.0) * (3.0 * p - 4.0)), 1.0 / (p - 2.0)); }

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2) throw DomainError("grid needs two points");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

GridReport check_h(double p, const std::vector<double>& x_grid) {
    GridReport r{"h_negative", describe("x", x_grid.front(), x_grid.back(), x_grid.size()), p, -HUGE_VAL, {}, false};
    for (double x : x_grid) {
        if (x < 0.0) throw DomainError("check_h grid must be nonnegative");
        const double v = h_function(p, x);
        if (v > r.worst_value) {
            r.worst_value = v;
            r.worst_point = {x};
        }
    }
    r.pass = r.worst_value < 0.0;
    return r;
}

GridReport check_claim_psi(double p, const std::vector<double>& z_grid, int nx) {
    const Potential pot(p);
    GridReport r{"psi_nonpositive", describe("z", z_grid.front(), z_grid.back(), z_grid.size()) + "; x in [z, 3 zmax], " + std::to_string(nx) + " points",
                 p, -HUGE_VAL, {}, false};
    for (double z : z_grid) {
        if (z < 1.0 || z >= pot.zmax()) throw DomainError("psi claim needs z in [1, zmax)");
        for (double x : uniform_grid(z, 3.0 * pot.zmax(), nx)) {
            const double v = psi_function(p, z, x);
            if (v > r.worst_value) {
                r.worst_value = v;
                r.worst_point = {z, x};
            }
        }
    }
    r.pass = r.worst_value <= kTolSign;
    return r;
}

GridReport check_claim_g(double p, const std::vector<double>& t_grid, double f2_perturbation) {
    GridReport r{"g_negative", describe("t", t_grid.front(), t_grid.back(), t_grid.size()) + ", excluding |t-1| < 1e-6", p, -HUGE_VAL, {}, false};
    for (double t : t_grid) {
        if (!(t > 0.0)) throw DomainError("g claim needs t > 0");
        if (std::fabs(t - 1.0) < 1e-6) continue;
        const double v = g_function(p, t, f2_perturbation);
        if (v > r.worst_value) {
            r.worst_value = v;
            r.worst_point = {t};
        }
    }
    r.pass = r.worst_value < 0.0 && std::fabs(g_function(p, 1.0, f2_perturbation)) <= 1e-12;
    return r;
}

namespace {

// central difference with a step scaled to the distance from the singular points
template <class L>
double slope(L&& len, double z, double zmax) {
    const double h = 1e-3 * std::min({z, std::fabs(z - 1.0), zmax - z});
    return (len(z + h) - len(z - h)) / (2.0 * h);
}

}  // namespace

GridReport check_length_derivative_sign(double p, const std::vector<double>& z_grid) {
    const Potential pot(p);
    GridReport r{"L1_slope_sign", describe("z", z_grid.front(), z_grid.back(), z_grid.size()) + ", z != 1", p, -HUGE_VAL, {}, false};
    for (double z : z_grid) {
        if (z == 1.0) continue;
        const double s = slope([&](double v) { return length_C(p, v); }, z, pot.zmax());
        // sgn L1' = -sgn f'  <=>  s * sgn f' < 0
        const double v = s * (pot.fprime(z) > 0.0 ? 1.0 : -1.0);
        if (v > r.worst_value) {
            r.worst_value = v;
            r.worst_point = {z, s};
        }
    }
    r.pass = r.worst_value < 0.0;
    return r;
}

GridReport check_length_A_slope(double p, const std::vector<double>& z_grid) {
    const Potential pot(p);
    GridReport r{"L_slope_negative", describe("z", z_grid.front(), z_grid.back(), z_grid.size()), p, -HUGE_VAL, {}, false};
    for (double z : z_grid) {
        const double h = 1e-3 * std::min(z, pot.zmax() - z);
        const double s = (length_A(p, z + h) - length_A(p, z - h)) / (2.0 * h);
        if (s > r.worst_value) {
            r.worst_value = s;
            r.worst_point = {z};
        }
    }
    r.pass = r.worst_value < 0.0;
    return r;
}

std::vector<GridReport> run_claims(double p, const ClaimsConfig& cfg) {
    if (cfg.density < 2) throw DomainError("claims density must be at least 2");
    const Potential pot(p);
    const int n = cfg.density;
    const double zmax = pot.zmax();
    std::vector<double> open_z;  // (0, zmax) without the end points and z = 1
    for (int i = 1; i <= n; ++i) {
        const double z = zmax * i / (n + 1);
        if (std::fabs(z - 1.0) < 1e-9) continue;
        open_z.push_back(z);
    }
    std::vector<double> psi_z = uniform_grid(1.0, zmax, n + 1);
    psi_z.pop_back();
    std::vector<double> t_grid = uniform_grid(0.0, 3.0 * zmax, n + 1);
    t_grid.erase(t_grid.begin());
    std::vector<GridReport> out(5);
    parallel_for(
        5,
        [&](std::size_t i) {
            switch (i) {
                case 0: out[0] = check_h(p, uniform_grid(0.0, 10.0, n)); break;
                case 1: out[1] = check_claim_psi(p, psi_z, n); break;
                case 2: out[2] = check_claim_g(p, t_grid, cfg.f2_perturbation); break;
                case 3: out[3] = check_length_derivative_sign(p, open_z); break;
                case 4: out[4] = check_length_A_slope(p, open_z); break;
            }
        },
        cfg.threads);
    return out;
}

}  // namespace tgraph
