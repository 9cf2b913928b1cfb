#include "tgraph/lengths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "roots.hpp"
#include "tgraph/errors.hpp"
#include "tgraph/quadrature.hpp"

namespace tgraph {

namespace {

constexpr double kNearCenter = 0.05;
constexpr double kZFloor = 1e-300;

// K = scale^2 * ks is the kinetic term u'^2/2 on the orbit; dt/dparam = scale * js.
struct OrbitPoint {
    double t, ks, scale, js;
};

struct Piece {
    double s0, s1;
    bool reversed;  // t decreases as the parameter grows
    std::function<OrbitPoint(double)> at;
};

using Orbit = std::vector<Piece>;  // ordered by increasing t

// f(x)/x^2
double g_ratio(const Potential& pot, double x) { return -0.5 * std::expm1((pot.p() - 2.0) * std::log(x / pot.zmax())); }

Piece upper_sqrt_piece(const Potential& pot, double c, double from) {
    return {0.0, std::sqrt(c - from), true, [pot, c](double u) {
                const double d = u * u;
                return OrbitPoint{c - d, pot.difference(c, -d), 1.0, 2.0 * u};
            }};
}

// Near zmax the orbit shrinks like sqrt(zmax - z), so one ulp of z moves it by a
// relative eps * zmax / (zmax - z); no quadrature can do better than that.
double floor_A(const Potential& pot, double z) {
    return 64.0 * std::numeric_limits<double>::epsilon() * pot.zmax() / (pot.zmax() - z);
}

Orbit orbit_A(const Potential& pot, double z) {
    const double fz = pot.f(z);
    const double ts = pot.inverse(-3.0 * fz, Branch::outer);
    const double m = z + 0.5 * (ts - z);
    const double gz = g_ratio(pot, z);
    Piece lower{0.0, std::log(m / z), false, [pot, z, gz](double v) {
                    const double t = z * std::exp(v);
                    return OrbitPoint{t, g_ratio(pot, t) + 3.0 * std::exp(-2.0 * v) * gz, t, 1.0};
                }};
    return {lower, upper_sqrt_piece(pot, ts, m)};
}

// t = a cosh v from the lower turning point a up to t = 1
Piece lower_cosh_piece(const Potential& pot, double a) {
    const double ga = g_ratio(pot, a);
    const double apm2 = std::pow(a, pot.p() - 2.0);
    return {0.0, std::acosh(1.0 / a), false, [pot, a, ga, apm2](double v) {
                const double ch = std::cosh(v);
                const double t = a * ch;
                if (v < 1.0) {
                    const double sh = std::sinh(v), sh2 = std::sinh(0.5 * v);
                    const double ks = 0.5 * sh * sh - apm2 * std::expm1(pot.p() * std::log1p(2.0 * sh2 * sh2)) / pot.p();
                    return OrbitPoint{t, ks, a, sh};
                }
                return OrbitPoint{t, g_ratio(pot, t) - ga / (ch * ch), t, std::tanh(v)};
            }};
}

// Near-center pieces: t = 1 + alpha (1 - u^2), K = alpha^2 S(u^2) with S from the Taylor series of f about 1.
double center_series(double p, double alpha, double s) {
    double binom = p * (p - 1.0) / 2.0;
    double P = s * (2.0 - s);               // 1 - (1-s)^2
    double om_pow = (1.0 - s) * (1.0 - s);  // (1-s)^2
    double apow = 1.0;
    double sum = 0.5 * (p - 2.0) * P;
    for (int k = 3; k < 120; ++k) {
        binom *= (p - (k - 1)) / k;
        P += s * om_pow;
        om_pow *= (1.0 - s);
        apow *= alpha;
        const double term = binom / p * apow * P;
        sum += term;
        if (std::fabs(term) < 1e-19 * std::fabs(sum) && k > 4) break;
    }
    return sum;
}

Piece center_piece(double p, double endpoint) {
    const double alpha = endpoint - 1.0;
    return {0.0, 1.0, alpha > 0.0, [p, alpha](double u) {
                const double s = u * u;
                return OrbitPoint{1.0 + alpha * (1.0 - s), center_series(p, alpha, s), std::fabs(alpha), 2.0 * u};
            }};
}

// partner of 1 + alpha on the same level, via the series about 1
double center_partner(double p, double alpha) {
    auto R = [&](double r) {
        double binom = p * (p - 1.0) / 2.0;
        double sum = 0.5 * (p - 2.0) * (r * r - 1.0);
        double apow = 1.0, rpow = r * r;
        for (int k = 3; k < 120; ++k) {
            binom *= (p - (k - 1)) / k;
            apow *= alpha;
            rpow *= -r;
            const double term = binom / p * apow * (rpow - 1.0);
            sum += term;
            if (std::fabs(term) < 1e-19 * std::fabs(sum) && k > 4) break;
        }
        return sum;
    };
    const double r = detail::solve_bracket(R, 0.5, 2.0, "center partner");
    return 1.0 - alpha * r;
}

double partner_of(const Potential& pot, double z) {
    if (std::fabs(z - 1.0) < kNearCenter) return center_partner(pot.p(), z - 1.0);
    return pot.inverse(pot.f(z), z < 1.0 ? Branch::high : Branch::low);
}

void check_c_domain(const Potential& pot, double z) {
    if (!(z > 0.0) || !(z < pot.zmax())) throw DomainError("type-C vertex value must lie in (0, zmax)");
    if (z == 1.0) throw DomainError("z = 1 is the constant state; use length_C_at_center");
}

Orbit orbit_C(const Potential& pot, double z) {
    const double w = partner_of(pot, z);
    const double a = std::min(z, w), c = std::max(z, w);
    if (std::fabs(z - 1.0) < kNearCenter) return {center_piece(pot.p(), a), center_piece(pot.p(), c)};
    return {lower_cosh_piece(pot, a), upper_sqrt_piece(pot, c, 1.0)};
}

enum class Mode { inverse, root };

// rel_floor: relative accuracy the input itself can support
double orbit_integral(const Orbit& orbit, const std::function<double(double)>& weight, Mode mode, double rel_floor = 0.0) {
    QuadOptions opts = orbit_quad_options();
    opts.rel_tol = std::max(opts.rel_tol, rel_floor);
    double sum = 0.0;
    for (const Piece& pc : orbit) {
        if (!(pc.s1 > pc.s0)) continue;
        auto fn = [&](double s) {
            const OrbitPoint q = pc.at(s);
            const double ks = std::max(q.ks, 0.0);
            const double w = weight ? weight(q.t) : 1.0;
            if (mode == Mode::inverse) return ks > 0.0 ? w * q.js / std::sqrt(2.0 * ks) : (q.js == 0.0 ? 0.0 : HUGE_VAL);
            return w * q.scale * q.scale * std::sqrt(2.0 * ks) * q.js;
        };
        sum += adaptive_integrate(fn, pc.s0, pc.s1, opts).value;
    }
    return sum;
}

std::function<double(double)> power_weight(double q) {
    if (q == 0.0) return {};
    return [q](double t) { return std::pow(t, q); };
}

double length_C_any(const Potential& pot, double z) {
    if (z == 1.0) return length_C_at_center(pot.p());
    return orbit_integral(orbit_C(pot, z), {}, Mode::inverse);
}

std::vector<SweepNode> sweep(const Orbit& orbit, double dx) {
    if (!(dx > 0.0)) throw DomainError("sweep spacing must be positive");
    QuadOptions opts;
    opts.abs_tol = 1e-15;
    opts.rel_tol = 1e-13;
    std::vector<SweepNode> out;
    double x = 0.0;
    for (const Piece& pc : orbit) {
        auto density = [&](double s) {
            const OrbitPoint q = pc.at(s);
            return q.ks > 0.0 ? q.js / std::sqrt(2.0 * q.ks) : 0.0;
        };
        auto node = [&](double s, double xv) {
            const OrbitPoint q = pc.at(s);
            return SweepNode{xv, q.t, q.scale * std::sqrt(2.0 * std::max(q.ks, 0.0))};
        };
        const double len = adaptive_integrate(density, pc.s0, pc.s1, orbit_quad_options()).value;
        int n = std::max(4, static_cast<int>(std::ceil(1.25 * len / dx)));
        for (int attempt = 0; attempt < 12; ++attempt, n *= 2) {
            std::vector<double> params(n + 1);
            for (int i = 0; i <= n; ++i) {
                const double f = static_cast<double>(i) / n;
                params[i] = pc.reversed ? pc.s1 + (pc.s0 - pc.s1) * f : pc.s0 + (pc.s1 - pc.s0) * f;
            }
            std::vector<SweepNode> local;
            local.reserve(n + 1);
            double xv = x, worst = 0.0;
            local.push_back(node(params[0], xv));
            for (int i = 1; i <= n; ++i) {
                const double lo = std::min(params[i - 1], params[i]), hi = std::max(params[i - 1], params[i]);
                const double seg = adaptive_integrate(density, lo, hi, opts).value;
                worst = std::max(worst, seg);
                xv += seg;
                local.push_back(node(params[i], xv));
            }
            if (worst <= dx || attempt == 11) {
                const std::size_t skip = out.empty() ? 0 : 1;
                out.insert(out.end(), local.begin() + skip, local.end());
                x = xv;
                break;
            }
        }
    }
    return out;
}

}  // namespace

LengthBranch length_branch(double p, LengthKind kind) {
    const Potential pot(p);
    switch (kind) {
        case LengthKind::A: return {kind, p, 0.0, pot.zmax()};
        case LengthKind::C_low: return {kind, p, 0.0, 1.0};
        case LengthKind::C_high: return {kind, p, 1.0, pot.zmax()};
    }
    throw DomainError("unknown length branch");
}

double length_A(double p, double z) {
    const Potential pot(p);
    if (!(z > 0.0) || z > pot.zmax()) throw DomainError("length_A needs z in (0, zmax]");
    if (z == pot.zmax()) return 0.0;
    return orbit_integral(orbit_A(pot, z), {}, Mode::inverse, floor_A(pot, z));
}

double invert_length_A(double p, double ell) {
    const Potential pot(p);
    if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("invert_length_A needs ell > 0");
    const double slo = std::log(kZFloor), shi = std::log(pot.zmax());
    auto g = [&](double s) { return s >= shi ? -ell : length_A(p, std::exp(s)) - ell; };
    const double glo = g(slo);
    if (glo < 0.0) throw NonconvergenceError("invert_length_A: target length beyond the z floor", kZFloor, glo);
    return std::exp(detail::solve_bracket(g, slo, shi, glo, -ell, "invert_length_A"));
}

double length_C(double p, double z) {
    const Potential pot(p);
    check_c_domain(pot, z);
    return length_C_any(pot, z);
}

double length_C_at_center(double p) {
    if (!(p > 2.0)) throw DomainError("exponent p must be > 2");
    return std::numbers::pi / std::sqrt(p - 2.0);
}

double ell_star(double p, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    return length_C_at_center(p) / std::sqrt(lambda);
}

double turning_partner(double p, double z) {
    const Potential pot(p);
    check_c_domain(pot, z);
    return partner_of(pot, z);
}

double invert_length_C(double p, double ell, LengthKind branch) {
    const Potential pot(p);
    const double center = length_C_at_center(p);
    if (branch == LengthKind::A) throw DomainError("invert_length_C needs a C branch");
    if (!(ell > center)) throw DomainError("no nonconstant type-C orbit at or below the center length pi/sqrt(p-2)");
    const double slo = std::log(kZFloor);
    auto g = [&](double s) { return s >= 0.0 ? center - ell : length_C_any(pot, std::exp(s)) - ell; };
    const double glo = g(slo);
    if (glo < 0.0) throw NonconvergenceError("invert_length_C: target length beyond the z floor", kZFloor, glo);
    const double zlow = std::exp(detail::solve_bracket(g, slo, 0.0, glo, center - ell, "invert_length_C"));
    if (branch == LengthKind::C_low) return zlow;
    return partner_of(pot, zlow);
}

double length_n(double p, double z, int n) {
    if (n < 1) throw DomainError("half-orbit count must be positive");
    return n * length_C(p, z);
}

double edge_moment_A(double p, double z, double q) {
    const Potential pot(p);
    if (!(z > 0.0) || z > pot.zmax()) throw DomainError("edge_moment_A needs z in (0, zmax]");
    if (q < 0.0) throw DomainError("moment order must be nonnegative");
    if (z == pot.zmax()) return 0.0;
    return orbit_integral(orbit_A(pot, z), power_weight(q), Mode::inverse, floor_A(pot, z));
}

double edge_gradient_A(double p, double z) {
    const Potential pot(p);
    if (!(z > 0.0) || z > pot.zmax()) throw DomainError("edge_gradient_A needs z in (0, zmax]");
    if (z == pot.zmax()) return 0.0;
    return orbit_integral(orbit_A(pot, z), {}, Mode::root, floor_A(pot, z));
}

double edge_moment_C(double p, double z, double q, int n) {
    const Potential pot(p);
    check_c_domain(pot, z);
    if (n < 1) throw DomainError("half-orbit count must be positive");
    if (q < 0.0) throw DomainError("moment order must be nonnegative");
    return n * orbit_integral(orbit_C(pot, z), power_weight(q), Mode::inverse);
}

double edge_gradient_C(double p, double z, int n) {
    const Potential pot(p);
    check_c_domain(pot, z);
    if (n < 1) throw DomainError("half-orbit count must be positive");
    return n * orbit_integral(orbit_C(pot, z), {}, Mode::root);
}

std::vector<SweepNode> sweep_A(double p, double z, double dx) {
    const Potential pot(p);
    if (!(z > 0.0) || !(z < pot.zmax())) throw DomainError("sweep_A needs z in (0, zmax)");
    return sweep(orbit_A(pot, z), dx);
}

std::vector<SweepNode> sweep_C(double p, double z, double dx) {
    const Potential pot(p);
    check_c_domain(pot, z);
    return sweep(orbit_C(pot, z), dx);
}

}  // namespace tgraph
