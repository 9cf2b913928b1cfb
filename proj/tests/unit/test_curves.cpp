#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tgraph/curves.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/solve.hpp"

using namespace tgraph;
using doctest::Approx;

TEST_CASE("theta limits at p = 6") {
    const double r3 = std::sqrt(3.0);
    CHECK(std::fabs(theta(6, 1e-4) - r3 * ref::pi / 2) < 0.01 * r3 * ref::pi / 2);
    CHECK(std::fabs(theta(6, 1e4) - r3 * ref::pi / 4) < 0.01 * r3 * ref::pi / 4);
    // no prefactor at p = 6: theta equals the unit-frequency mass on the graph of length sqrt(lambda)
    CHECK(theta(6, 2.5) == Approx(observables(solve_type_a({6, 1, std::sqrt(2.5)})).mass).epsilon(1e-12));
}

TEST_CASE("theta scan extrema") {
    const auto grid = log_grid(kDefaultLambdaMin, kDefaultLambdaMax, kDefaultGridPoints);
    const CurveScan s6 = theta_scan(6, grid);
    REQUIRE(s6.lambdas.size() == 200);
    CHECK(s6.theta.size() == 200);
    bool has_min = false;
    for (const auto& e : s6.extrema) has_min = has_min || e.kind == ExtremumKind::min;
    CHECK(has_min);
    CHECK(theta_scan(2.5, grid).extrema.empty());
    CHECK(monotonicity_report(grid, grid).empty());
}

TEST_CASE("extremum refinement") {
    std::vector<double> l, v;
    for (int i = 0; i < 41; ++i) {
        l.push_back(std::exp(-2.0 + 0.1 * i));
        v.push_back(std::pow(std::log(l.back()) - 0.03, 2));
    }
    const auto ex = monotonicity_report(l, v);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].kind == ExtremumKind::min);
    CHECK(std::log(ex[0].lambda) == Approx(0.03).epsilon(1e-9));
    // flat noise never produces an extremum on its own
    std::vector<double> noisy{1, 1 + 1e-14, 1, 1 + 1e-14, 1};
    CHECK(monotonicity_report({1, 2, 3, 4, 5}, noisy).empty());
}

TEST_CASE("energy and action of the ground state") {
    for (double p : {4.0, 6.0, 8.0})
        for (double lam : {0.5, 1.0, 2.0}) CHECK(action_of_gs(p, lam) > 0.0);
    // two code paths: the rescaled unit-graph state and the direct frequency-lambda solve
    for (double lam : {0.5, 3.0}) {
        const Observables o = observables(solve_type_a({5, lam, 1}));
        CHECK(std::fabs(energy_of_gs(5, lam) - o.energy) < 1e-8);
        CHECK(std::fabs(theta(5, lam) - o.mass) < 1e-8);
    }
}

TEST_CASE("energy curve below the onset of non-monotonicity") {
    const auto grid = log_grid(kDefaultLambdaMin, kDefaultLambdaMax, kDefaultGridPoints);
    CHECK(theta_scan(4, grid).energy_extrema.empty());
    CHECK(theta_scan(4.2, grid).energy_extrema.empty());
    CHECK_FALSE(theta_scan(4.5, grid).energy_extrema.empty());
}

TEST_CASE("dual lambda") {
    const CurveScan s = theta_scan(6, log_grid(kDefaultLambdaMin, kDefaultLambdaMax, kDefaultGridPoints));
    const Extremum* mn = nullptr;
    for (const auto& e : s.extrema)
        if (e.kind == ExtremumKind::min) mn = &e;
    REQUIRE(mn != nullptr);
    const DualLambdaResult d = dual_lambda(6, mn->value + 0.01, s);
    REQUIRE(d.roots.size() >= 2);
    REQUIRE(!d.pairs.empty());
    const auto [a, b] = d.pairs.front();
    CHECK(std::fabs(theta(6, a) - theta(6, b)) < 1e-8);
    CHECK(std::min(a, b) < mn->lambda);
    CHECK(std::max(a, b) > mn->lambda);
    CHECK(dual_lambda(6, 10.0, s).roots.empty());
}

TEST_CASE("self-intersections") {
    CHECK(self_intersections({0, 1}, {0, 1}).empty());
    // figure eight traced once
    std::vector<double> x, y;
    for (int i = 0; i <= 100; ++i) {
        const double t = 2 * ref::pi * i / 100.0 + 0.01;
        x.push_back(std::sin(t));
        y.push_back(std::sin(t) * std::cos(t));
    }
    CHECK(self_intersections(x, y).size() == 1);
    const ParametricCurve c = parametric_curve(5.8, log_grid(1e-3, 1e3, 120));
    CHECK(c.mass.size() == 120);
    CHECK(c.self_intersections.empty());
}

TEST_CASE("theta continuity under refinement") {
    for (double p : {4.0, 6.0, 8.0}) {
        auto max_jump = [&](std::size_t n) {
            const CurveScan s = theta_scan(p, log_grid(0.1, 10, n));
            double m = 0;
            for (std::size_t i = 1; i < n; ++i) m = std::max(m, std::fabs(s.theta[i] - s.theta[i - 1]));
            return m;
        };
        CHECK(max_jump(41) <= 0.5 * max_jump(21) * 1.05);
    }
}

TEST_CASE("mass scaling law and prefactor sign") {
    for (double p : {4.0, 8.0}) {
        const double lam = 3.0;
        const double direct = observables(solve_type_a({p, lam, 1})).mass;
        const double unit = observables(solve_type_a({p, 1, std::sqrt(lam)})).mass;
        CHECK(direct == Approx(std::pow(lam, (6 - p) / (2 * (p - 2))) * unit).epsilon(1e-8));
        CHECK(theta(p, lam) == Approx(direct).epsilon(1e-8));
    }
    CHECK(mass_scale(4, 2) > 1.0);
    CHECK(mass_scale(8, 2) < 1.0);
}
