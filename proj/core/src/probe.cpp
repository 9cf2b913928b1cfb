#include "tgraph/probe.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "tgraph/errors.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/quadrature.hpp"
#include "tgraph/solve.hpp"

namespace tgraph {

namespace {

constexpr double kTail = 35.0;
constexpr double kTableStep = 2e-3;

// Terminal-edge profile u3(s), s in [0, ell], from exact orbit nodes and quintic Hermite
// interpolation (values, slopes and curvatures at the nodes are exact).
class EdgeTable {
public:
    EdgeTable(double p, double ell, double dx) : p_(p), ell_(ell), sol_(p, 1.0) {
        z_ = invert_length_A(p, ell);
        y_ = sol_.inverse(z_);
        const auto nodes = sweep_A(p, z_, dx);
        const double stretch = ell / nodes.back().x;
        for (const auto& nd : nodes) {
            s_.push_back(nd.x * stretch);
            u_.push_back(nd.u);
            du_.push_back(nd.du);
            d2u_.push_back(nd.u - std::pow(nd.u, p - 1.0));
        }
        s_.back() = ell;
        for (std::size_t i = 1; i < s_.size(); ++i) max_step_ = std::max(max_step_, s_[i] - s_[i - 1]);
    }

    double z() const { return z_; }
    double y() const { return y_; }
    double ell() const { return ell_; }
    double max_step() const { return max_step_; }
    const Soliton& soliton() const { return sol_; }

    // (u3, u3') at distance s from the vertex
    std::pair<double, double> edge(double s) const {
        s = std::clamp(s, 0.0, ell_);
        std::size_t i = std::upper_bound(s_.begin(), s_.end(), s) - s_.begin();
        i = std::clamp<std::size_t>(i, 1, s_.size() - 1) - 1;
        const double h = s_[i + 1] - s_[i];
        const double t = (s - s_[i]) / h;
        const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
        const double H0 = 1 - 10 * t3 + 15 * t4 - 6 * t5, H1 = t - 6 * t3 + 8 * t4 - 3 * t5, H2 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
        const double H5 = 10 * t3 - 15 * t4 + 6 * t5, H4 = -4 * t3 + 7 * t4 - 3 * t5, H3 = 0.5 * (t3 - 2 * t4 + t5);
        const double D0 = -30 * t2 + 60 * t3 - 30 * t4, D1 = 1 - 18 * t2 + 32 * t3 - 15 * t4, D2 = 0.5 * (2 * t - 9 * t2 + 12 * t3 - 5 * t4);
        const double D5 = -D0, D4 = -12 * t2 + 28 * t3 - 15 * t4, D3 = 0.5 * (3 * t2 - 8 * t3 + 5 * t4);
        const double u = u_[i] * H0 + h * du_[i] * H1 + h * h * d2u_[i] * H2 + u_[i + 1] * H5 + h * du_[i + 1] * H4 + h * h * d2u_[i + 1] * H3;
        const double du = (u_[i] * D0 + u_[i + 1] * D5) / h + du_[i] * D1 + du_[i + 1] * D4 + h * (d2u_[i] * D2 + d2u_[i + 1] * D3);
        return {u, du};
    }

    // unfolded psi and psi' at x >= 0
    std::pair<double, double> psi(double x) const {
        if (x >= ell_) {
            const double a = x - ell_ + y_;
            return {sol_.value(a), sol_.deriv(a)};
        }
        const auto [u, du] = edge(ell_ - x);
        return {u, -du};
    }

private:
    double p_, ell_;
    Soliton sol_;
    double z_ = 0.0, y_ = 0.0, max_step_ = 0.0;
    std::vector<double> s_, u_, du_, d2u_;
};

struct Moments {
    double M = 0.0, X = 0.0, Xp = 0.0;
};

class Path {
public:
    Path(const Params& params, const PathSpec& spec) : params_(params), spec_(spec), p_(params.p), ell_(params.normalized_ell()) {
        params.validate();
        eps_ = spec.eps > 0.0 ? spec.eps : 1.0 / (ell_ * ell_);
        if (spec.regime == Regime::large_ell && !(eps_ < ell_)) throw DomainError("cutoff width must be smaller than ell");
        double dx = kTableStep;
        if (spec.regime == Regime::large_ell) dx = std::min(dx, eps_ / 20.0);
        dx = std::min(dx, ell_ / 50.0);
        table_ = std::make_unique<EdgeTable>(p_, ell_, dx);
        if (spec.regime == Regime::large_ell && table_->max_step() > eps_ / 20.0 * (1.0 + 1e-9))
            throw NonconvergenceError("unfolded profile undersampled near the cutoff", table_->max_step(), eps_ / 20.0);
        nu_ = moments(1.0).M;
    }

    double eps() const { return eps_; }
    double nu() const { return nu_; }
    const EdgeTable& table() const { return *table_; }

    Moments moments(double t) const {
        const double xmax = ell_ + kTail;
        std::vector<double> br{0.0, ell_, xmax};
        std::vector<std::pair<double, double>> fine;
        if (spec_.regime == Regime::large_ell) {
            for (double c : {ell_ - eps_, ell_ + eps_, (ell_ - eps_) / t, ell_ / t, (ell_ + eps_) / t}) br.push_back(c);
            fine = {{ell_ - eps_, ell_ + eps_}, {(ell_ - eps_) / t, (ell_ + eps_) / t}};
        }
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
        Moments m;
        for (std::size_t k = 0; k + 1 < br.size(); ++k) {
            const double a = br[k], b = br[k + 1];
            if (!(b > a) || a >= xmax) continue;
            const double mid = 0.5 * (a + b);
            const double w = mid < ell_ ? 1.0 : 2.0;  // [ell, inf) stands for both half-lines
            double width = 0.02;
            for (const auto& [lo, hi] : fine)
                if (mid > lo && mid < hi) width = eps_ / 16.0;
            const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
            m.M += w * gauss_legendre([&](double x) { auto v = xi(x, t); return v.first * v.first; }, a, b, panels);
            m.X += w * gauss_legendre([&](double x) { auto v = xi(x, t); return v.second * v.second; }, a, b, panels);
            m.Xp += w * gauss_legendre([&](double x) { auto v = xi(x, t); return std::pow(std::fabs(v.first), p_); }, a, b, panels);
        }
        return m;
    }

    double energy(double t, double* drift = nullptr) const {
        const Moments m = moments(t);
        const double r = nu_ / m.M;
        if (drift) *drift = std::fabs(r * m.M - nu_) / nu_;
        return 0.5 * r * m.X - std::pow(r, 0.5 * p_) * m.Xp / p_;
    }

private:
    // (xi_t, xi_t') at x
    std::pair<double, double> xi(double x, double t) const {
        const double st = std::sqrt(t);
        if (spec_.regime == Regime::large_ell) {
            const auto [ps, dps] = table_->psi(x);
            const double s = (x - ell_) / eps_;
            const double c = cutoff_value(spec_.cutoff, s), dc = cutoff_slope(spec_.cutoff, s) / eps_;
            const double tx = t * x;
            const auto [pt, dpt] = table_->psi(tx);
            const double st2 = (tx - ell_) / eps_;
            const double ct = cutoff_value(spec_.cutoff, st2), dct = cutoff_slope(spec_.cutoff, st2) / eps_;
            const double g = pt * (1.0 - ct), dg = dpt * (1.0 - ct) - pt * dct;
            return {ps * c + st * g, dps * c + ps * dc + t * st * dg};
        }
        const Soliton& sol = table_->soliton();
        const double shift = table_->y() - ell_;
        const double a = t * x + shift;
        double v = st * sol.value(a), dv = t * st * sol.deriv(a);
        if (x < ell_) {
            const auto [ps, dps] = table_->psi(x);
            v += ps - sol.value(x + shift);
            dv += dps - sol.deriv(x + shift);
        }
        return {v, dv};
    }

    Params params_;
    PathSpec spec_;
    double p_, ell_, eps_ = 0.0, nu_ = 0.0;
    std::unique_ptr<EdgeTable> table_;
};

}  // namespace

std::string to_string(Regime r) { return r == Regime::large_ell ? "large" : "small"; }
std::string to_string(Cutoff c) { return c == Cutoff::bump ? "bump" : "cosine"; }

double cutoff_value(Cutoff c, double s) {
    if (std::fabs(s) >= 1.0) return 0.0;
    if (c == Cutoff::bump) return std::exp(1.0 - 1.0 / (1.0 - s * s));
    return 0.5 * (1.0 + std::cos(std::numbers::pi * s));
}

double cutoff_slope(Cutoff c, double s) {
    if (std::fabs(s) >= 1.0) return 0.0;
    if (c == Cutoff::bump) {
        const double q = 1.0 - s * s;
        return cutoff_value(c, s) * (-2.0 * s / (q * q));
    }
    return -0.5 * std::numbers::pi * std::sin(std::numbers::pi * s);
}

double prediction_factor(double p) { return -(1.0 / p) * (0.5 * p - 1.0) * ((p - 6.0) / 2.0); }

UnfoldedProfile build_unfolded(const Params& params, int n_samples) {
    params.validate();
    if (n_samples < 2) throw DomainError("build_unfolded needs at least two samples");
    const double elln = params.normalized_ell();
    const EdgeTable table(params.p, elln, std::min(kTableStep, elln / 50.0));
    const double as = amplitude_scale(params.p, params.lambda), rl = std::sqrt(params.lambda);
    UnfoldedProfile prof;
    prof.ell = params.ell;
    // half the samples on the edge, half on the tail, both ends included
    const int n_edge = std::max(2, n_samples / 2);
    const int n_tail = std::max(2, n_samples - n_edge + 1);
    auto push = [&](double x) {
        const auto [v, dv] = table.psi(x);
        prof.xs.push_back(x / rl);
        prof.psi.push_back(v * as);
        prof.dpsi.push_back(dv * as * rl);
    };
    for (int i = 0; i < n_edge; ++i) push(elln * i / (n_edge - 1));
    for (int i = 1; i < n_tail; ++i) push(elln + kTail * i / (n_tail - 1));
    return prof;
}

double path_energy(const Params& params, const PathSpec& spec, double t) {
    if (!(t >= 0.5 && t <= 2.0)) throw DomainError("path parameter t must lie in [0.5, 2]");
    const Path path(params, spec);
    return path.energy(t) * lp_scale(params.p, params.lambda);
}

ProbeReport second_derivative(const Params& params, const PathSpec& spec) {
    if (!(spec.h > 0.0 && spec.h < 0.1)) throw DomainError("finite-difference step must lie in (0, 0.1)");
    const Path path(params, spec);
    const double p = params.p, h = spec.h, scale = lp_scale(p, params.lambda);
    ProbeReport rep;
    rep.params = params;
    rep.regime = spec.regime;
    rep.cutoff = spec.cutoff;
    rep.eps = path.eps();
    rep.h = h;
    rep.mass = path.nu() * mass_scale(p, params.lambda);
    const std::vector<double> ts{1.0 - 2.0 * h, 1.0 - h, 1.0 - 0.5 * h, 1.0, 1.0 + 0.5 * h, 1.0 + h, 1.0 + 2.0 * h};
    std::vector<double> es(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double drift = 0.0;
        es[i] = path.energy(ts[i], &drift) * scale;
        rep.mass_drift = std::max(rep.mass_drift, drift);
        rep.energies.emplace_back(ts[i], es[i]);
    }
    const double em2 = es[0], em1 = es[1], emh = es[2], e0 = es[3], eph = es[4], ep1 = es[5], ep2 = es[6];
    rep.second_derivative_fd = (-ep2 + 16.0 * ep1 - 30.0 * e0 + 16.0 * em1 - em2) / (12.0 * h * h);
    const double hh = 0.5 * h;
    rep.second_derivative_half = (-ep1 + 16.0 * eph - 30.0 * e0 + 16.0 * emh - em1) / (12.0 * hh * hh);
    rep.second_derivative_richardson = (16.0 * rep.second_derivative_half - rep.second_derivative_fd) / 15.0;
    rep.first_derivative = (ep1 - em1) / (2.0 * h);
    rep.energy_at_one = e0;
    rep.ground_state_energy = observables(solve_type_a(params)).energy;
    const EdgeTable& tb = path.table();
    rep.p_moment = spec.regime == Regime::large_ell ? edge_moment_A(p, tb.z(), p) : 2.0 * halfline_moment(tb.soliton(), 0.0, p);
    rep.p_moment *= lp_scale(p, params.lambda);
    rep.asymptotic_prediction = prediction_factor(p) * rep.p_moment;
    rep.relative_gap = std::fabs(rep.second_derivative_fd - rep.asymptotic_prediction) / std::fabs(rep.asymptotic_prediction);
    rep.verdict = rep.second_derivative_fd < 0.0 ? "unstable-direction found" : "condition not met";
    return rep;
}

AsymptoticIngredients asymptotic_ingredients(const Params& params) {
    params.validate();
    const double p = params.p;
    const double z = invert_length_A(p, params.normalized_ell());
    AsymptoticIngredients a;
    a.grad_sq_edge = edge_gradient_A(p, z);
    a.p_moment_edge = edge_moment_A(p, z, p);
    a.pohozaev_residual = a.grad_sq_edge - (p - 2.0) / (2.0 * p) * a.p_moment_edge;
    const double s = lp_scale(p, params.lambda);
    a.grad_sq_edge *= s;
    a.p_moment_edge *= s;
    a.pohozaev_residual *= s;
    return a;
}

double soliton_pohozaev_defect(double p) {
    const Soliton s(p, 1.0);
    return 2.0 * halfline_gradient(s, 0.0) - (p - 2.0) / (2.0 * p) * 2.0 * halfline_moment(s, 0.0, p);
}

double boundary_term(double p, double ell) {
    const double eps = 1.0 / (ell * ell);
    const EdgeTable table(p, ell, std::min(kTableStep, eps / 20.0));
    const double v = table.psi(ell - eps).first;
    return ell * ell * std::pow(v, p) / eps;
}

}  // namespace tgraph
