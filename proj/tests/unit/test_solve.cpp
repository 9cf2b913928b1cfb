#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/quadrature.hpp"
#include "tgraph/solve.hpp"

using namespace tgraph;
using doctest::Approx;

namespace {
int expected_c(double p, double lambda, double ell) {
    const double ls = ell_star(p, lambda);
    int n = 0;
    while ((n + 1) * ls < ell) ++n;
    return 4 * n + 2;
}

std::vector<BoundState> all_states(const SolutionSet& s) {
    std::vector<BoundState> v{s.type_a};
    v.insert(v.end(), s.type_c.begin(), s.type_c.end());
    return v;
}
}  // namespace

TEST_CASE("type-A solve") {
    const BoundState s = solve_type_a({6, 1, 1});
    CHECK(s.kind == StateKind::TypeA);
    CHECK(length_A(6, s.z) == Approx(1.0).epsilon(1e-9));
    CHECK(s.y > 0.0);
    CHECK(ref::soliton(6, s.y) == Approx(s.z).epsilon(1e-12));
    CHECK(s.level == Approx(-3 * ref::f(6, s.z)).epsilon(1e-12));
    const BoundState tiny = solve_type_a({6, 1, 1e-4});
    CHECK(tiny.z == Approx(ref::zmax(6)).epsilon(1e-6));
    CHECK(tiny.y < 0.05);
}

TEST_CASE("rescaled type-A state matches the direct solve") {
    for (double lam : {0.3, 4.0}) {
        const BoundState a = solve_type_a({5, lam, 1});
        const BoundState b = rescale(solve_type_a({5, 1, std::sqrt(lam)}), lam);
        CHECK(a.params.ell == Approx(b.params.ell).epsilon(1e-12));
        CHECK(a.z == Approx(b.z).epsilon(1e-9));
        CHECK(a.y == Approx(b.y).epsilon(1e-9));
        CHECK(a.level == Approx(b.level).epsilon(1e-9));
    }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate({6, 1, 1}).counts.C == 2);
    const SolutionSet s2 = enumerate({6, 1, 2});
    CHECK(s2.counts.A == 1);
    CHECK(s2.counts.B == 0);
    CHECK(s2.counts.C == 6);
    CHECK(s2.type_c.size() == 6);
    CHECK(enumerate({4, 1, 5}).counts.C == 10);
    // exactly on a threshold the collapsing pair merges into the constants
    CHECK(enumerate({6, 1, ref::pi / 2}).counts.C == 2);
    CHECK(enumerate({6, 1, ref::pi}).counts.C == 6);
    CHECK(enumerate({6, 4, 2}).counts.C == expected_c(6, 4, 2));
}

TEST_CASE("counts on random lengths") {
    for (double p : {3.0, 4.0, 6.0, 8.0}) {
        std::mt19937_64 rng(static_cast<unsigned long>(p));
        std::uniform_real_distribution<double> u(0.01, 5.0 * ell_star(p, 1));
        for (int k = 0; k < 30; ++k) {
            const double ell = u(rng);
            const SolutionSet s = enumerate({p, 1, ell});
            CHECK(s.counts.C == expected_c(p, 1, ell));
            CHECK(static_cast<int>(s.type_c.size()) == s.counts.C);
        }
    }
}

TEST_CASE("reconstructed profiles") {
    const BoundState a = solve_type_a({6, 1, 1});
    const EdgeProfile e3 = reconstruct_edge(a, Edge::e3, 200);
    CHECK(e3.xs.size() >= 200);
    CHECK(e3.xs.back() == Approx(1.0).epsilon(1e-12));
    CHECK(e3.us.back() == Approx(Potential(6).inverse(-3 * ref::f(6, a.z), Branch::outer)).epsilon(1e-12));
    CHECK(std::fabs(e3.dus.back()) < 1e-8);
    const Soliton sol(6, 1);
    CHECK(e3.dus.front() == Approx(-2 * sol.deriv(a.y)).epsilon(1e-12));
    CHECK(e3.dus.front() > 0.0);
    const EdgeProfile e1 = reconstruct_edge(a, Edge::e1, 200);
    CHECK(e1.us.front() == Approx(a.z).epsilon(1e-12));
    CHECK(e1.us.back() < 1e-11);

    const SolutionSet s = enumerate({6, 1, 1});
    for (const auto& c : s.type_c) {
        REQUIRE(c.is_constant());
        const EdgeProfile p = reconstruct_edge(c, Edge::e3, 50);
        for (std::size_t i = 0; i < p.us.size(); ++i) {
            CHECK(p.us[i] == 1.0);
            CHECK(p.dus[i] == 0.0);
        }
    }
    CHECK_THROWS(reconstruct_edge(a, Edge::e3, 1));
}

TEST_CASE("vertex and tip conditions, level constancy") {
    for (double ell : {0.7, 2.0, 5.0}) {
        for (const BoundState& s : all_states(enumerate({6, 1, ell}))) {
            const EdgeProfile e1 = reconstruct_edge(s, Edge::e1, 100), e2 = reconstruct_edge(s, Edge::e2, 100),
                              e3 = reconstruct_edge(s, Edge::e3, 400);
            CHECK(std::fabs(e1.dus.front() + e2.dus.front() + e3.dus.front()) < 1e-8);
            CHECK(std::fabs(e3.dus.back()) < 1e-8);
            CHECK(std::fabs(e1.us.front() - e3.us.front()) < 1e-12);
            CHECK(std::fabs(e2.us.front() - e3.us.front()) < 1e-12);
            double drift = 0.0;
            for (std::size_t i = 0; i < e3.us.size(); ++i)
                drift = std::max(drift, std::fabs(-0.5 * e3.dus[i] * e3.dus[i] + ref::f(6, e3.us[i]) - s.level));
            CHECK(drift < 1e-7);
            for (double u : e3.us) CHECK(u > 0.0);
        }
    }
}

TEST_CASE("observables") {
    for (double p : {4.0, 6.0, 8.0}) {
        for (double ell : {0.5, 1.0, 2.0}) {
            const BoundState a = solve_type_a({p, 1, ell});
            const Observables o = observables(a);
            CHECK(std::fabs(o.action - (0.5 - 1.0 / p) * o.lp_norm_p) < 1e-7 * o.lp_norm_p);
            CHECK(std::fabs(o.grad_sq + o.mass - o.lp_norm_p) < 1e-7 * o.lp_norm_p);
            CHECK(o.sup == Approx(Potential(p).inverse(-3 * ref::f(p, a.z), Branch::outer)).epsilon(1e-12));
            CHECK(o.sup >= 1.0);
            CHECK(o.energy == Approx(0.5 * o.grad_sq - o.lp_norm_p / p).epsilon(1e-14));
        }
    }
    // mass from an independent RK4 quadrature of the edge plus Simpson on the half-lines
    const BoundState a = solve_type_a({6, 1, 1});
    const ref::Orbit o = ref::shoot(6, a.z, std::sqrt(8 * ref::f(6, a.z)), 2.0);
    const double half = ref::simpson([&](double x) { return std::pow(ref::soliton(6, x + a.y), 2); }, 0.0, 40.0, 40000);
    CHECK(observables(a).mass == Approx(o.mass + 2 * half).epsilon(1e-7));
}

TEST_CASE("solution identities for every enumerated state") {
    for (double p : {3.0, 6.0}) {
        for (double ell : {0.4, 3.0, 7.0}) {
            for (const BoundState& s : all_states(enumerate({p, 1.5, ell}))) {
                const Observables o = observables(s);
                CHECK(std::fabs(o.grad_sq + 1.5 * o.mass - o.lp_norm_p) < 1e-7 * o.lp_norm_p);
                CHECK(std::fabs(o.action - (0.5 - 1 / p) * o.lp_norm_p) < 1e-7 * o.lp_norm_p);
            }
        }
    }
}

TEST_CASE("type-C half-lines form one full soliton") {
    const SolutionSet s = enumerate({6, 1, 2});
    const double line_mass = 2 * halfline_moment(Soliton(6, 1), 0, 2);
    for (const auto& c : s.type_c) {
        const Observables o = observables(c);
        const double edge = c.is_constant() ? 2.0 : edge_moment_C(6, c.z, 2, c.half_orbits);
        CHECK(o.mass == Approx(line_mass + edge).epsilon(1e-10));
    }
}

TEST_CASE("rescale") {
    const BoundState a = solve_type_a({4, 1, 1});
    const BoundState same = rescale(a, 1.0);
    CHECK(same.z == a.z);
    CHECK(same.params.ell == a.params.ell);
    const BoundState b6 = solve_type_a({6, 1, 1});
    CHECK(observables(rescale(b6, 3.0)).mass == Approx(observables(b6).mass).epsilon(1e-12));
    CHECK(observables(rescale(a, 4.0)).mass == Approx(2.0 * observables(a).mass).epsilon(1e-12));
    CHECK(mass_scale(4, 4) == Approx(2.0));
    CHECK(amplitude_scale(4, 4) == Approx(2.0));
}
