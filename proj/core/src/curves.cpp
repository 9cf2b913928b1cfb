#include "tgraph/curves.hpp"

#include <algorithm>
#include <cmath>

#include "roots.hpp"
#include "tgraph/errors.hpp"
#include "tgraph/parallel.hpp"
#include "tgraph/solve.hpp"

namespace tgraph {

GroundStatePoint ground_state_point(double p, double lambda) {
    const BoundState gs = solve_type_a({p, lambda, 1.0});
    const Observables o = observables(gs);
    return {o.mass, o.energy, o.action};
}

double theta(double p, double lambda) { return ground_state_point(p, lambda).theta; }
double energy_of_gs(double p, double lambda) { return ground_state_point(p, lambda).energy; }
double action_of_gs(double p, double lambda) { return ground_state_point(p, lambda).action; }

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("log_grid needs 0 < lo < hi and n >= 2");
    std::vector<double> g(n);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * static_cast<double>(i) / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<Extremum> monotonicity_report(const std::vector<double>& lambdas, const std::vector<double>& values, double flat_tol) {
    return monotonicity_report(lambdas, values, {}, flat_tol);
}

std::vector<Extremum> monotonicity_report(const std::vector<double>& lambdas, const std::vector<double>& values,
                                          const std::vector<double>& scales, double flat_tol) {
    const std::size_t n = values.size();
    if (lambdas.size() != n) throw DomainError("grid and values differ in length");
    if (!scales.empty() && scales.size() != n) throw DomainError("grid and scales differ in length");
    std::vector<Extremum> out;
    if (n < 3) return out;
    std::vector<int> sgn(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = values[i + 1] - values[i];
        const double scale = scales.empty() ? std::max(std::fabs(values[i]), std::fabs(values[i + 1]))
                                            : std::max(std::fabs(scales[i]), std::fabs(scales[i + 1]));
        sgn[i] = std::fabs(d) <= flat_tol * scale ? 0 : (d > 0 ? 1 : -1);
    }
    int last = 0;
    std::size_t last_idx = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sgn[i] == 0) continue;
        if (last != 0 && sgn[i] != last) {
            // turning point between difference last_idx and i; centre of any flat run
            const std::size_t k = (last_idx + 1 + i) / 2;
            Extremum e;
            e.kind = last > 0 ? ExtremumKind::max : ExtremumKind::min;
            e.index = k;
            e.lambda = lambdas[k];
            e.value = values[k];
            if (k > 0 && k + 1 < n) {
                // parabola through three points in log lambda
                const double x0 = std::log(lambdas[k - 1]), x1 = std::log(lambdas[k]), x2 = std::log(lambdas[k + 1]);
                const double y0 = values[k - 1], y1 = values[k], y2 = values[k + 1];
                const double d1 = (y1 - y0) / (x1 - x0), d2 = (y2 - y1) / (x2 - x1);
                const double a = (d2 - d1) / (x2 - x0);
                if (a != 0.0) {
                    const double b = d1 - a * (x0 + x1);
                    const double xv = std::clamp(-b / (2.0 * a), x0, x2);
                    e.lambda = std::exp(xv);
                    e.value = y1 + (xv - x1) * (d1 + a * (xv - x0));
                }
            }
            out.push_back(e);
        }
        last = sgn[i];
        last_idx = i;
    }
    return out;
}

std::vector<Extremum> monotonicity_report(const CurveScan& scan) { return monotonicity_report(scan.lambdas, scan.theta); }

CurveScan theta_scan(double p, const std::vector<double>& lambdas, int threads) {
    if (lambdas.size() < 3) throw DomainError("theta_scan needs at least three grid points");
    if (!std::is_sorted(lambdas.begin(), lambdas.end())) throw DomainError("theta_scan needs a sorted grid");
    CurveScan s;
    s.p = p;
    s.lambdas = lambdas;
    const std::size_t n = lambdas.size();
    s.theta.resize(n);
    s.energy.resize(n);
    s.action.resize(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            const GroundStatePoint g = ground_state_point(p, lambdas[i]);
            s.theta[i] = g.theta;
            s.energy[i] = g.energy;
            s.action[i] = g.action;
        },
        threads);
    s.extrema = monotonicity_report(s.lambdas, s.theta);
    // E is a difference of terms of the size of the action; measure flatness against that
    s.energy_extrema = monotonicity_report(s.lambdas, s.energy, s.action);
    return s;
}

DualLambdaResult dual_lambda(double p, double nu, const CurveScan& scan) {
    DualLambdaResult res;
    const std::size_t n = scan.lambdas.size();
    if (n < 2) return res;
    std::vector<std::size_t> bounds{0};
    for (const Extremum& e : scan.extrema) bounds.push_back(e.index);
    bounds.push_back(n - 1);
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        for (std::size_t j = bounds[b]; j < bounds[b + 1]; ++j) {
            const double g0 = scan.theta[j] - nu, g1 = scan.theta[j + 1] - nu;
            if (g0 == 0.0) {
                res.roots.push_back(scan.lambdas[j]);
                break;
            }
            if (g0 * g1 < 0.0) {
                auto g = [&](double s) { return theta(p, std::exp(s)) - nu; };
                const double s = detail::solve_bracket(g, std::log(scan.lambdas[j]), std::log(scan.lambdas[j + 1]), g0, g1, "dual_lambda");
                res.roots.push_back(std::exp(s));
                break;
            }
        }
    }
    std::sort(res.roots.begin(), res.roots.end());
    res.roots.erase(std::unique(res.roots.begin(), res.roots.end()), res.roots.end());
    for (std::size_t i = 0; i < res.roots.size(); ++i)
        for (std::size_t j = i + 1; j < res.roots.size(); ++j) res.pairs.emplace_back(res.roots[i], res.roots[j]);
    return res;
}

std::vector<Intersection> self_intersections(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw DomainError("polyline coordinates differ in length");
    std::vector<Intersection> out;
    const std::size_t n = xs.size();
    if (n < 4) return out;
    auto cross = [](double ax, double ay, double bx, double by) { return ax * by - ay * bx; };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
            const double ax = xs[i], ay = ys[i], bx = xs[i + 1], by = ys[i + 1];
            const double cx = xs[j], cy = ys[j], dx = xs[j + 1], dy = ys[j + 1];
            const double rx = bx - ax, ry = by - ay, sx = dx - cx, sy = dy - cy;
            const double guard = 1e-12 * std::hypot(rx, ry) * std::hypot(sx, sy);
            const double o1 = cross(rx, ry, cx - ax, cy - ay), o2 = cross(rx, ry, dx - ax, dy - ay);
            const double o3 = cross(sx, sy, ax - cx, ay - cy), o4 = cross(sx, sy, bx - cx, by - cy);
            auto opposite = [&](double u, double v) { return (u > guard && v < -guard) || (u < -guard && v > guard); };
            if (opposite(o1, o2) && opposite(o3, o4)) {
                const double t = o3 / (o3 - o4);
                out.push_back({i, j, ax + t * rx, ay + t * ry});
            }
        }
    }
    return out;
}

ParametricCurve parametric_curve(const CurveScan& scan) {
    ParametricCurve c;
    c.p = scan.p;
    c.lambdas = scan.lambdas;
    c.mass = scan.theta;
    c.energy = scan.energy;
    c.self_intersections = self_intersections(c.mass, c.energy);
    return c;
}

ParametricCurve parametric_curve(double p, const std::vector<double>& lambdas, int threads) {
    if (lambdas.size() < 2) throw DomainError("parametric_curve needs at least two grid points");
    CurveScan s;
    s.p = p;
    s.lambdas = lambdas;
    s.theta.resize(lambdas.size());
    s.energy.resize(lambdas.size());
    parallel_for(
        lambdas.size(),
        [&](std::size_t i) {
            const GroundStatePoint g = ground_state_point(p, lambdas[i]);
            s.theta[i] = g.theta;
            s.energy[i] = g.energy;
        },
        threads);
    return parametric_curve(s);
}

}  // namespace tgraph
