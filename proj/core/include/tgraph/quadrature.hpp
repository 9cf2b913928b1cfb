#pragma once

#include <cstddef>
#include <functional>

#include "tgraph/core_math.hpp"

namespace tgraph {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_depth = 60;
    std::size_t max_intervals = 20000;
};

// Process-wide default absolute tolerance (1e-10 unless overridden, e.g. by TGRAPH_NLS_TOL).
double default_tolerance();
void set_default_tolerance(double tol);
QuadOptions default_quad_options();
// Options used for phase-plane integrals: relative accuracy, scaled from the default tolerance.
QuadOptions orbit_quad_options();

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t intervals = 0;
};

// Global adaptive 21-point Gauss-Kronrod on a finite interval.
QuadResult adaptive_integrate(const std::function<double(double)>& fn, double a, double b, const QuadOptions& opts);

enum class SingularEnds { none, lower, upper, both };

// kernel(t, t - lower, upper - t): the distances are passed exactly so kernels can avoid cancellation.
using EndpointKernel = std::function<double(double, double, double)>;

struct SingularIntegral {
    double lower = 0.0;
    double upper = 1.0;
    EndpointKernel kernel;
    SingularEnds singular_ends = SingularEnds::none;
    double tol = 1e-10;
};

// Square-root substitution at each declared end (t = end -/+ u^2) followed by adaptive panels.
QuadResult integrate(const SingularIntegral& spec, const QuadOptions& opts);
double integrate(const SingularIntegral& spec);

// int_0^inf phi(x + y)^q dx; negative y allowed.
double halfline_moment(const Soliton& s, double y, double q);
// int_0^inf phi'(x + y)^2 dx; negative y allowed.
double halfline_gradient(const Soliton& s, double y);
// Same integrals by plain truncation at x_max; a cross-check only.
double halfline_moment_truncated(const Soliton& s, double y, double q, double x_max);

// Fixed n-point Gauss-Legendre on [a, b] split into `panels` equal pieces; n in {10, 20}.
double gauss_legendre(const std::function<double(double)>& fn, double a, double b, int panels, int n = 20);

}  // namespace tgraph
