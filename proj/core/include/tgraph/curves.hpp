#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace tgraph {

enum class ExtremumKind { min, max };

struct Extremum {
    double lambda = 0.0;  // parabola-refined location
    double value = 0.0;   // parabola-refined value
    ExtremumKind kind = ExtremumKind::min;
    std::size_t index = 0;  // nearest grid index
};

struct CurveScan {
    double p = 0.0;
    std::vector<double> lambdas;
    std::vector<double> theta;
    std::vector<double> energy;
    std::vector<double> action;
    std::vector<Extremum> extrema;         // of theta
    std::vector<Extremum> energy_extrema;  // of energy
};

// Mass, energy and action of the action ground state on the unit graph at frequency lambda.
struct GroundStatePoint {
    double theta = 0.0;
    double energy = 0.0;
    double action = 0.0;
};

GroundStatePoint ground_state_point(double p, double lambda);
double theta(double p, double lambda);
double energy_of_gs(double p, double lambda);
double action_of_gs(double p, double lambda);

std::vector<double> log_grid(double lo, double hi, std::size_t n);
inline constexpr double kDefaultLambdaMin = 1e-3;
inline constexpr double kDefaultLambdaMax = 1e3;
inline constexpr std::size_t kDefaultGridPoints = 200;

CurveScan theta_scan(double p, const std::vector<double>& lambdas, int threads = 0);
// Interior extrema from sign changes of first differences; differences below
// flat_tol * |value| count as flat and never create an extremum on their own.
std::vector<Extremum> monotonicity_report(const std::vector<double>& lambdas, const std::vector<double>& values, double flat_tol = 1e-10);
// Same, with flatness measured against |scales| instead of |values| (for quantities that cancel).
std::vector<Extremum> monotonicity_report(const std::vector<double>& lambdas, const std::vector<double>& values,
                                          const std::vector<double>& scales, double flat_tol = 1e-10);
std::vector<Extremum> monotonicity_report(const CurveScan& scan);

struct DualLambdaResult {
    std::vector<double> roots;
    std::vector<std::pair<double, double>> pairs;
};

// Every lambda in the scan range with theta(p, lambda) = nu, one root search per monotone segment.
DualLambdaResult dual_lambda(double p, double nu, const CurveScan& scan);

struct Intersection {
    std::size_t seg_a = 0;
    std::size_t seg_b = 0;
    double x = 0.0;
    double y = 0.0;
};

struct ParametricCurve {
    double p = 0.0;
    std::vector<double> lambdas;
    std::vector<double> mass;
    std::vector<double> energy;
    std::vector<Intersection> self_intersections;
};

std::vector<Intersection> self_intersections(const std::vector<double>& xs, const std::vector<double>& ys);
ParametricCurve parametric_curve(double p, const std::vector<double>& lambdas, int threads = 0);
ParametricCurve parametric_curve(const CurveScan& scan);

}  // namespace tgraph
