#include "tgraph/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "tgraph/errors.hpp"

namespace tgraph {

namespace {

std::atomic<double> g_default_tol{1e-10};

struct Panel {
    double a, b, value, error;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
using G10 = boost::math::quadrature::gauss<double, 10>;

// QUADPACK-style error estimate on one panel.
Panel gk21(const std::function<double(double)>& fn, double a, double b, int depth) {
    const auto& xk = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = G10::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[21];
    fv[0] = fn(c);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        fv[2 * i - 1] = fn(c + h * xk[i]);
        fv[2 * i] = fn(c - h * xk[i]);
    }
    double rk = fv[0] * wk[0], rg = 0.0, resabs = std::fabs(rk);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double s = fv[2 * i - 1] + fv[2 * i];
        rk += s * wk[i];
        resabs += (std::fabs(fv[2 * i - 1]) + std::fabs(fv[2 * i])) * wk[i];
        if (i % 2 == 1) rg += s * wg[i / 2 + 0];  // gauss nodes sit at odd kronrod indices
    }
    const double mean = 0.5 * rk;
    double resasc = wk[0] * std::fabs(fv[0] - mean);
    for (std::size_t i = 1; i < xk.size(); ++i)
        resasc += wk[i] * (std::fabs(fv[2 * i - 1] - mean) + std::fabs(fv[2 * i] - mean));
    rk *= h;
    resabs *= std::fabs(h);
    resasc *= std::fabs(h);
    double err = std::fabs(rk - rg * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
    if (!std::isfinite(rk)) err = std::numeric_limits<double>::infinity();
    return {a, b, rk, err, depth};
}

}  // namespace

double default_tolerance() { return g_default_tol.load(); }

void set_default_tolerance(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
    g_default_tol.store(tol);
}

QuadOptions default_quad_options() {
    QuadOptions o;
    o.abs_tol = default_tolerance();
    return o;
}

QuadOptions orbit_quad_options() {
    QuadOptions o;
    o.abs_tol = 0.0;
    o.rel_tol = std::clamp(default_tolerance() * 1e-3, 2e-14, 1e-6);
    return o;
}

QuadResult adaptive_integrate(const std::function<double(double)>& fn, double a, double b, const QuadOptions& opts) {
    if (!(a < b)) {
        if (a == b) return {};
        throw DomainError("adaptive_integrate needs lower < upper");
    }
    std::priority_queue<Panel> open;
    double done_value = 0.0, done_error = 0.0;
    Panel first = gk21(fn, a, b, 0);
    double total = first.value, err = first.error;
    open.push(first);
    std::size_t count = 1;
    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::fabs(total)); };
    while (err > target()) {
        if (open.empty() || count >= opts.max_intervals) break;
        Panel top = open.top();
        open.pop();
        if (top.depth >= opts.max_depth) {
            done_value += top.value;
            done_error += top.error;
            continue;
        }
        const double mid = 0.5 * (top.a + top.b);
        Panel l = gk21(fn, top.a, mid, top.depth + 1);
        Panel r = gk21(fn, mid, top.b, top.depth + 1);
        total += l.value + r.value - top.value;
        err += l.error + r.error - top.error;
        open.push(l);
        open.push(r);
        ++count;
    }
    // recompute sums to shed accumulated rounding
    double v = done_value, e = done_error;
    while (!open.empty()) {
        v += open.top().value;
        e += open.top().error;
        open.pop();
    }
    if (!std::isfinite(v) || e > std::max(opts.abs_tol, opts.rel_tol * std::fabs(v)) * (1.0 + 1e-9)) {
        throw NonconvergenceError("adaptive quadrature did not reach tolerance", v, e);
    }
    return {v, e, count};
}

QuadResult integrate(const SingularIntegral& spec, const QuadOptions& opts) {
    if (!(spec.lower < spec.upper)) throw DomainError("integrate needs lower < upper");
    if (!spec.kernel) throw DomainError("integrate needs a kernel");
    const double a = spec.lower, b = spec.upper, len = b - a;
    const auto& k = spec.kernel;
    auto from_lower = [&](double lo, double hi) {
        // t = a + u^2
        return adaptive_integrate(
            [&](double u) {
                const double d = u * u;
                return 2.0 * u * k(a + d, d, len - d);
            },
            std::sqrt(lo - a), std::sqrt(hi - a), opts);
    };
    auto from_upper = [&](double lo, double hi) {
        // t = b - u^2
        return adaptive_integrate(
            [&](double u) {
                const double d = u * u;
                return 2.0 * u * k(b - d, len - d, d);
            },
            std::sqrt(b - hi), std::sqrt(b - lo), opts);
    };
    QuadOptions half = opts;
    half.abs_tol *= 0.5;
    switch (spec.singular_ends) {
        case SingularEnds::none:
            return adaptive_integrate([&](double t) { return k(t, t - a, b - t); }, a, b, opts);
        case SingularEnds::lower: return from_lower(a, b);
        case SingularEnds::upper: return from_upper(a, b);
        case SingularEnds::both: {
            const double m = a + 0.5 * len;
            QuadResult l = from_lower(a, m);
            QuadResult r = from_upper(m, b);
            return {l.value + r.value, l.error + r.error, l.intervals + r.intervals};
        }
    }
    throw DomainError("unknown singular-end flag");
}

double integrate(const SingularIntegral& spec) {
    QuadOptions o;
    o.abs_tol = spec.tol;
    return integrate(spec, o).value;
}

namespace {

// int_{s0}^1 s^k (1 - s^2)^{beta - 1} ds with om = 1 - s0 in (0, 1]
double tanh_tail(double beta, int k, double om) {
    if (om <= 0.0) return 0.0;
    QuadOptions o = orbit_quad_options();
    auto body = [&](double u) { return std::pow(1.0 - u, k) * std::pow(2.0 - u, beta - 1.0); };
    if (beta < 1.0) {
        // w = u^beta removes the endpoint singularity at s = 1
        const double wmax = std::pow(om, beta);
        if (wmax == 0.0) return 0.0;
        return adaptive_integrate([&](double w) { return body(std::pow(w, 1.0 / beta)) / beta; }, 0.0, wmax, o).value;
    }
    return adaptive_integrate([&](double u) { return std::pow(u, beta - 1.0) * body(u); }, 0.0, om, o).value;
}

// 1 - tanh(b y) for y >= 0 without cancellation
double one_minus_tanh(double by) { return 2.0 / (std::exp(2.0 * by) + 1.0); }

double moment_nonneg(const Soliton& s, double y, double q) {
    const double beta = q / (s.p() - 2.0);
    return std::pow(s.amplitude(), q) / s.decay_rate() * tanh_tail(beta, 0, one_minus_tanh(s.decay_rate() * y));
}

double gradient_nonneg(const Soliton& s, double y) {
    const double beta = 2.0 / (s.p() - 2.0);
    const double A = s.amplitude();
    return s.lambda() * A * A / s.decay_rate() * tanh_tail(beta, 2, one_minus_tanh(s.decay_rate() * y));
}

}  // namespace

double halfline_moment(const Soliton& s, double y, double q) {
    if (!(q > 0.0)) throw DomainError("moment order q must be positive");
    if (y >= 0.0) return moment_nonneg(s, y, q);
    return 2.0 * moment_nonneg(s, 0.0, q) - moment_nonneg(s, -y, q);
}

double halfline_gradient(const Soliton& s, double y) {
    if (y >= 0.0) return gradient_nonneg(s, y);
    return 2.0 * gradient_nonneg(s, 0.0) - gradient_nonneg(s, -y);
}

double halfline_moment_truncated(const Soliton& s, double y, double q, double x_max) {
    QuadOptions o;
    o.abs_tol = 1e-13;
    return adaptive_integrate([&](double x) { return std::pow(s.value(x + y), q); }, 0.0, x_max, o).value;
}

double gauss_legendre(const std::function<double(double)>& fn, double a, double b, int panels, int n) {
    if (panels < 1) throw DomainError("gauss_legendre needs at least one panel");
    const double h = (b - a) / panels;
    double sum = 0.0;
    auto run = [&](const auto& x, const auto& w) {
        for (int j = 0; j < panels; ++j) {
            const double c = a + (j + 0.5) * h, r = 0.5 * h;
            double acc = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0.0) {
                    acc += w[i] * fn(c);
                } else {
                    acc += w[i] * (fn(c + r * x[i]) + fn(c - r * x[i]));
                }
            }
            sum += r * acc;
        }
    };
    if (n == 20) {
        run(boost::math::quadrature::gauss<double, 20>::abscissa(), boost::math::quadrature::gauss<double, 20>::weights());
    } else if (n == 10) {
        run(boost::math::quadrature::gauss<double, 10>::abscissa(), boost::math::quadrature::gauss<double, 10>::weights());
    } else {
        throw DomainError("gauss_legendre supports n = 10 or 20");
    }
    return sum;
}

}  // namespace tgraph
