// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "tgraph/tgraph.hpp"

using namespace tgraph;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// ell values spread over (0, 5 ell*) that never sit on a multiple of ell*
std::vector<double> ell_samples(double p) {
    const double ls = ell_star(p, 1.0);
    std::mt19937_64 rng(static_cast<unsigned long>(p * 1000));
    std::uniform_real_distribution<double> jitter(0.05, 0.95);
    std::vector<double> out;
    for (int k = 0; k < 30; ++k) out.push_back(5.0 * ls * (k + jitter(rng)) / 30.0);
    return out;
}

int expected_c(double p, double ell) {
    const double ls = ell_star(p, 1.0);
    int n = 0;
    while ((n + 1) * ls < ell) ++n;
    return 4 * n + 2;
}

Outcome criterion1() {
    double worst = 0.0;
    for (double p : {3.0, 4.0, 6.0, 8.0}) {
        const Soliton s(p, 1.0);
        const double h = 1e-3;
        for (int i = 0; i <= 2000; ++i) {
            const double x = 20.0 * i / 2000;
            const double d2 = (-s(x + 2 * h) + 16 * s(x + h) - 30 * s(x) + 16 * s(x - h) - s(x - 2 * h)) / (12 * h * h);
            worst = std::max(worst, std::fabs(-d2 + s(x) - std::pow(s(x), p - 1)));
        }
    }
    return {worst < 1e-8, fmt("max ODE residual %.3e (limit 1e-8)", worst)};
}

Outcome criterion2() {
    bool ok = true;
    double worst_center = 0.0;
    for (double p : {3.0, 4.0, 6.0, 8.0}) {
        ok = ok && length_A(p, Potential(p).zmax()) == 0.0;
        worst_center = std::max(worst_center, std::fabs(length_C_at_center(p) - kPi / std::sqrt(p - 2)) / (kPi / std::sqrt(p - 2)));
    }
    const double gm = std::fabs(length_C(6, 1 - 1e-3) - kPi / 2), gp = std::fabs(length_C(6, 1 + 1e-3) - kPi / 2);
    ok = ok && gm < 5e-3 && gp < 5e-3 && worst_center <= 4 * std::numeric_limits<double>::epsilon();
    return {ok, fmt("L_A(zmax)=0; |L_C(6,1-+1e-3)-pi/2| = %.2e, %.2e; center rel err %.1e", gm, gp, worst_center)};
}

struct EnumStats {
    bool counts_ok = true;
    int states = 0;
    int failed_verify = 0;
    double worst_residual = 0.0;
    double worst_h1 = 0.0;
    double worst_action = 0.0;
};

EnumStats enumerate_all() {
    EnumStats st;
    for (double p : {3.0, 4.0, 6.0, 8.0}) {
        for (double ell : ell_samples(p)) {
            const SolutionSet set = enumerate({p, 1.0, ell});
            if (set.counts.A != 1 || set.counts.B != 0 || set.counts.C != expected_c(p, ell) ||
                static_cast<int>(set.type_c.size()) != set.counts.C)
                st.counts_ok = false;
            std::vector<BoundState> all{set.type_a};
            all.insert(all.end(), set.type_c.begin(), set.type_c.end());
            for (const auto& s : all) {
                ++st.states;
                const VerifyReport r = verify_state(s, 1e-6);
                if (!r.pass) ++st.failed_verify;
                st.worst_residual = std::max({st.worst_residual, r.shoot_residual, r.kirchhoff_residual, r.continuity_residual,
                                              r.level_drift, r.ode_residual_max});
                const Observables o = observables(s);
                st.worst_h1 = std::max(st.worst_h1, std::fabs(o.grad_sq + s.params.lambda * o.mass - o.lp_norm_p) / o.lp_norm_p);
                st.worst_action = std::max(st.worst_action, std::fabs(o.action - (0.5 - 1.0 / p) * o.lp_norm_p) / o.lp_norm_p);
            }
        }
    }
    return st;
}

Outcome criterion3(const EnumStats& st) {
    return {st.counts_ok && st.failed_verify == 0,
            fmt("%d states over 120 ell values, counts %s, %d failed verification, worst residual %.2e (limit 1e-6)", st.states,
                st.counts_ok ? "exact" : "WRONG", st.failed_verify, st.worst_residual)};
}

Outcome criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> pd(3.0, 8.0), ud(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double p = pd(rng);
        const Potential pot(p);
        double len = 0.0, u0 = 0.0, du0 = 0.0;
        if (k % 2 == 0) {
            u0 = 0.2 + (pot.zmax() - 0.25) * ud(rng);
            len = length_A(p, u0);
            du0 = std::sqrt(8.0 * pot.f(u0));
        } else {
            u0 = ud(rng) < 0.5 ? 0.2 + 0.75 * ud(rng) : 1.05 + (pot.zmax() - 1.1) * ud(rng);
            len = length_C(p, u0);
        }
        const auto shot = rk_shoot(p, u0, du0, len + 1.0, default_steps(len + 1.0), {ShootStop::critical, 0});
        worst = std::max(worst, shot.first_critical_x ? std::fabs(*shot.first_critical_x - len) : 1.0);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst < 1e-6 && secs < 30.0, fmt("worst |L - RK4| %.2e over 20 samples (limit 1e-6), %.2f s (limit 30 s)", worst, secs)};
}

Outcome criterion5and6(Outcome& c6) {
    const double ref_lo = std::sqrt(3.0) * kPi / 2, ref_hi = std::sqrt(3.0) * kPi / 4;
    const double e_lo = std::fabs(theta(6, 1e-4) - ref_lo) / ref_lo, e_hi = std::fabs(theta(6, 1e4) - ref_hi) / ref_hi;
    const CurveScan scan = theta_scan(6.0, log_grid(kDefaultLambdaMin, kDefaultLambdaMax, kDefaultGridPoints));
    const Extremum* mn = nullptr;
    for (const auto& e : scan.extrema)
        if (e.kind == ExtremumKind::min && (!mn || e.value < mn->value)) mn = &e;
    Outcome c5{e_lo < 0.01 && e_hi < 0.01 && mn != nullptr,
               fmt("rel err at 1e-4: %.2e, at 1e4: %.2e; interior minima: %s", e_lo, e_hi,
                   mn ? fmt("Theta_min=%.10f at lambda=%.5g", mn->value, mn->lambda).c_str() : "none")};
    if (!mn) {
        c6 = {false, "no interior minimum to build a fold mass from"};
        return c5;
    }
    const double nu = mn->value + 0.01;
    const DualLambdaResult d = dual_lambda(6.0, nu, scan);
    bool ok = d.roots.size() >= 2 && !d.pairs.empty();
    double worst_gap = 0.0, ratio = 0.0;
    for (const auto& [a, b] : d.pairs) {
        worst_gap = std::max(worst_gap, std::fabs(theta(6, a) - theta(6, b)));
        ratio = std::max(ratio, std::max(a, b) / std::min(a, b));
    }
    ok = ok && worst_gap < 1e-8 && ratio > 1.01;
    c6 = {ok, fmt("nu=%.10f: %zu roots, |dTheta| %.2e (limit 1e-8), lambda ratio %.4f (limit 1.01)", nu, d.roots.size(), worst_gap, ratio)};
    return c5;
}

Outcome criterion7() {
    const auto grid = log_grid(kDefaultLambdaMin, kDefaultLambdaMax, kDefaultGridPoints);
    const std::size_t ex25 = theta_scan(2.5, grid).extrema.size();
    const std::size_t e44 = theta_scan(4.4, grid).energy_extrema.size();
    const std::size_t e45 = theta_scan(4.5, grid).energy_extrema.size();
    std::size_t inter = 0;
    for (double p : {4.5, 5.2, 5.8}) inter += parametric_curve(p, grid).self_intersections.size();
    return {ex25 == 0 && e44 == 0 && e45 > 0 && inter == 0,
            fmt("Theta(2.5) extrema %zu; energy extrema p=4.4: %zu, p=4.5: %zu; self-intersections %zu", ex25, e44, e45, inter)};
}

Outcome criterion8() {
    bool ok = true;
    int reports = 0;
    double g1 = 0.0, psi_diag = 0.0;
    for (double p : {2.5, 3.0, 4.0, 6.0, 8.0, 11.0}) {
        for (int density : {200, 400}) {
            for (const auto& r : run_claims(p, {density, 0.0, 0})) {
                ++reports;
                ok = ok && r.pass;
            }
        }
        g1 = std::max(g1, std::fabs(g_function(p, 1.0)));
        const Potential pot(p);
        for (double z : uniform_grid(1.0, pot.zmax(), 50)) {
            const double fp = pot.derivative(z, 1);
            psi_diag = std::max(psi_diag, std::fabs(psi_function(p, z, z) + 4 * fp * fp));
        }
    }
    ok = ok && g1 <= 1e-12 && psi_diag <= 1e-10;
    return {ok, fmt("%d grid reports %s; |g(1)| %.1e; |psi(z,z)+4f'^2| %.1e", reports, ok ? "all pass" : "with failures", g1, psi_diag)};
}

Outcome criterion9() {
    bool ok = true;
    std::string detail;
    for (double p : {7.0, 8.0, 10.0}) {
        for (auto [regime, ell] : {std::pair{Regime::large_ell, 10.0}, std::pair{Regime::small_ell, 0.05}}) {
            PathSpec spec;
            spec.regime = regime;
            const ProbeReport b = second_derivative({p, 1.0, ell}, spec);
            spec.cutoff = Cutoff::cosine;
            const ProbeReport c = second_derivative({p, 1.0, ell}, spec);
            const double swap = std::fabs(b.second_derivative_fd - c.second_derivative_fd) / std::fabs(b.second_derivative_fd);
            const bool here = b.second_derivative_fd < 0 && b.relative_gap < 0.2 && std::fabs(b.first_derivative) < 1e-4 &&
                              b.mass_drift < 1e-10 && swap < 0.01;
            ok = ok && here;
            detail += fmt("[p=%g %s ell=%g: d2=%.4g pred=%.4g gap=%.3f d1=%.1e swap=%.1e %s] ", p, to_string(regime).c_str(), ell,
                          b.second_derivative_fd, b.asymptotic_prediction, b.relative_gap, b.first_derivative, swap, here ? "ok" : "FAIL");
        }
    }
    return {ok, detail};
}

Outcome criterion10(const EnumStats& st) {
    return {st.worst_h1 < 1e-7 && st.worst_action < 1e-7,
            fmt("%d states: worst H1 identity %.2e, action identity %.2e (limit 1e-7 relative)", st.states, st.worst_h1, st.worst_action)};
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const std::function<Outcome()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failures;
        std::printf("criterion %2d: %s  %s (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
    };
    EnumStats st;
    Outcome c6;
    report(1, criterion1);
    report(2, criterion2);
    report(3, [&] {
        st = enumerate_all();
        return criterion3(st);
    });
    report(4, criterion4);
    report(5, [&] { return criterion5and6(c6); });
    report(6, [&] { return c6; });
    report(7, criterion7);
    report(8, criterion8);
    report(9, criterion9);
    report(10, [&] { return criterion10(st); });
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
