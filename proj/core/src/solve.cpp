#include "tgraph/solve.hpp"

#include <algorithm>
#include <cmath>

#include "tgraph/errors.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/quadrature.hpp"

namespace tgraph {

namespace {

constexpr double kTailCut = 1e-12;

BoundState make_state(const Params& params, StateKind kind, double zn, double yn, int k, int sigma, double level_n) {
    BoundState s;
    s.params = params;
    s.kind = kind;
    s.z = amplitude_scale(params.p, params.lambda) * zn;
    s.y = yn / std::sqrt(params.lambda);
    s.half_orbits = k;
    s.orientation = sigma;
    s.level = level_scale(params.p, params.lambda) * level_n;
    return s;
}

BoundState type_c_state(const Params& params, const Soliton& sol, const Potential& pot, double zn, int k, int sigma) {
    const double yabs = sol.inverse(std::min(zn, sol.amplitude()));
    return make_state(params, StateKind::TypeC, zn, sigma > 0 ? -yabs : yabs, k, sigma, pot.f(zn));
}

void append_sweep(EdgeProfile& prof, const std::vector<SweepNode>& nodes, double x0, bool upward, double xs_scale, double us_scale, double dus_scale) {
    const double len = nodes.back().x;
    const std::size_t n = nodes.size();
    const std::size_t start = prof.xs.empty() ? 0 : 1;
    for (std::size_t i = start; i < n; ++i) {
        const SweepNode& nd = upward ? nodes[i] : nodes[n - 1 - i];
        const double x = upward ? nd.x : len - nd.x;
        prof.xs.push_back((x0 + x) * xs_scale);
        prof.us.push_back(nd.u * us_scale);
        prof.dus.push_back((upward ? nd.du : -nd.du) * dus_scale);
    }
}

}  // namespace

std::string to_string(StateKind k) { return k == StateKind::TypeA ? "A" : "C"; }

std::string to_string(Edge e) {
    switch (e) {
        case Edge::e1: return "e1";
        case Edge::e2: return "e2";
        case Edge::e3: return "e3";
    }
    return "?";
}

double amplitude_scale(double p, double lambda) { return std::pow(lambda, 1.0 / (p - 2.0)); }
double level_scale(double p, double lambda) { return std::pow(lambda, p / (p - 2.0)); }
double mass_scale(double p, double lambda) { return std::pow(lambda, (6.0 - p) / (2.0 * (p - 2.0))); }
double lp_scale(double p, double lambda) { return std::pow(lambda, (p + 2.0) / (2.0 * (p - 2.0))); }

double normalized_z(const BoundState& s) { return s.z / amplitude_scale(s.params.p, s.params.lambda); }

BoundState solve_type_a(const Params& params) {
    params.validate();
    const double p = params.p;
    const Potential pot(p);
    const Soliton sol(p, 1.0);
    const double zn = invert_length_A(p, params.normalized_ell());
    const double yn = sol.inverse(zn);
    return make_state(params, StateKind::TypeA, zn, yn, 0, 0, -3.0 * pot.f(zn));
}

SolutionSet enumerate(const Params& params) {
    params.validate();
    const double p = params.p;
    const Potential pot(p);
    const Soliton sol(p, 1.0);
    SolutionSet set;
    set.params = params;
    set.type_a = solve_type_a(params);
    for (int sigma : {+1, -1}) set.type_c.push_back(type_c_state(params, sol, pot, 1.0, 0, sigma));
    const double elln = params.normalized_ell();
    const double center = length_C_at_center(p);
    for (int k = 1; elln / k > center; ++k) {
        const double zlow = invert_length_C(p, elln / k, LengthKind::C_low);
        if (std::fabs(zlow - 1.0) < kCenterMergeTol) continue;
        const double zhigh = turning_partner(p, zlow);
        for (double zn : {zlow, zhigh})
            for (int sigma : {+1, -1}) set.type_c.push_back(type_c_state(params, sol, pot, zn, k, sigma));
    }
    set.counts = {1, 0, static_cast<int>(set.type_c.size())};
    return set;
}

EdgeProfile reconstruct_edge(const BoundState& state, Edge edge, int n_samples) {
    if (n_samples < 2) throw DomainError("reconstruct_edge needs at least two samples");
    const Params& pr = state.params;
    const double p = pr.p, lam = pr.lambda, rl = std::sqrt(lam);
    const double as = amplitude_scale(p, lam);
    EdgeProfile prof;
    prof.edge = edge;
    if (edge != Edge::e3) {
        const Soliton sol(p, lam);
        const double shift = (edge == Edge::e2 && state.kind == StateKind::TypeC) ? -state.y : state.y;
        // first x >= 0 with phi(x + shift) < cut
        const double xpeak = std::max(0.0, -shift);
        const double xcut = std::max(xpeak, sol.inverse(kTailCut * sol.amplitude()) - shift);
        for (int i = 0; i < n_samples; ++i) {
            const double x = xcut * i / (n_samples - 1);
            prof.xs.push_back(x);
            prof.us.push_back(sol.value(x + shift));
            prof.dus.push_back(sol.deriv(x + shift));
        }
        return prof;
    }
    const double elln = pr.normalized_ell();
    const double zn = normalized_z(state);
    const double dx = elln / (n_samples - 1);
    if (state.is_constant()) {
        for (int i = 0; i < n_samples; ++i) {
            prof.xs.push_back(pr.ell * i / (n_samples - 1));
            prof.us.push_back(as);
            prof.dus.push_back(0.0);
        }
        return prof;
    }
    const double dus_scale = as * rl;
    if (state.kind == StateKind::TypeA) {
        append_sweep(prof, sweep_A(p, zn, dx), 0.0, true, 1.0 / rl, as, dus_scale);
        return prof;
    }
    const auto nodes = sweep_C(p, zn, dx);
    const double half = nodes.back().x;
    bool upward = zn < 1.0;
    for (int k = 0; k < state.half_orbits; ++k, upward = !upward) append_sweep(prof, nodes, k * half, upward, 1.0 / rl, as, dus_scale);
    return prof;
}

Observables observables(const BoundState& state) {
    const Params& pr = state.params;
    const double p = pr.p;
    const Soliton sol(p, 1.0);
    const double zn = normalized_z(state);
    const double elln = pr.normalized_ell();
    double mass, lp, grad, sup;
    if (state.kind == StateKind::TypeA) {
        const double yn = state.y * std::sqrt(pr.lambda);
        const Potential pot(p);
        mass = 2.0 * halfline_moment(sol, yn, 2.0) + edge_moment_A(p, zn, 2.0);
        lp = 2.0 * halfline_moment(sol, yn, p) + edge_moment_A(p, zn, p);
        grad = 2.0 * halfline_gradient(sol, yn) + edge_gradient_A(p, zn);
        sup = pot.inverse(-3.0 * pot.f(zn), Branch::outer);
    } else {
        // the two half-lines together carry one full soliton
        mass = 2.0 * halfline_moment(sol, 0.0, 2.0);
        lp = 2.0 * halfline_moment(sol, 0.0, p);
        grad = 2.0 * halfline_gradient(sol, 0.0);
        if (state.is_constant()) {
            mass += elln;
            lp += elln;
        } else {
            mass += edge_moment_C(p, zn, 2.0, state.half_orbits);
            lp += edge_moment_C(p, zn, p, state.half_orbits);
            grad += edge_gradient_C(p, zn, state.half_orbits);
        }
        sup = sol.amplitude();
    }
    Observables o;
    o.mass = mass * mass_scale(p, pr.lambda);
    o.lp_norm_p = lp * lp_scale(p, pr.lambda);
    o.grad_sq = grad * lp_scale(p, pr.lambda);
    o.energy = 0.5 * o.grad_sq - o.lp_norm_p / p;
    o.action = o.energy + 0.5 * pr.lambda * o.mass;
    o.sup = sup * amplitude_scale(p, pr.lambda);
    return o;
}

BoundState rescale(const BoundState& state, double new_lambda) {
    if (!(new_lambda > 0.0)) throw DomainError("rescale needs a positive lambda");
    const Params& pr = state.params;
    if (new_lambda == pr.lambda) return state;
    const double p = pr.p;
    BoundState s = state;
    s.params.lambda = new_lambda;
    s.params.ell = pr.normalized_ell() / std::sqrt(new_lambda);
    s.z = normalized_z(state) * amplitude_scale(p, new_lambda);
    s.y = state.y * std::sqrt(pr.lambda) / std::sqrt(new_lambda);
    s.level = state.level / level_scale(p, pr.lambda) * level_scale(p, new_lambda);
    return s;
}

}  // namespace tgraph
