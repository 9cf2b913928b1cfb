#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tgraph/lengths.hpp"
#include "tgraph/oracle.hpp"
#include "tgraph/solve.hpp"

using namespace tgraph;
using doctest::Approx;

TEST_CASE("shooting from the homoclinic apex keeps the level") {
    const auto r = rk_shoot(6, ref::zmax(6), 0.0, 5.0, default_steps(5.0));
    CHECK(r.hamiltonian_drift < 1e-8);
    CHECK_FALSE(r.drift_warning);
}

TEST_CASE("shooting from the equilibrium") {
    const auto r = rk_shoot(6, 1.0, 0.0, 5.0, default_steps(5.0));
    CHECK_FALSE(r.first_critical_x.has_value());
    CHECK(std::fabs(r.u_end - 1.0) < 1e-12);
    CHECK(r.hamiltonian_drift < 1e-14);
}

TEST_CASE("shooting reproduces the type-A length") {
    const double z = invert_length_A(6, 1.0);
    const auto r = rk_shoot(6, z, std::sqrt(8 * ref::f(6, z)), 2.0, default_steps(2.0), {ShootStop::critical, 0});
    REQUIRE(r.first_critical_x.has_value());
    CHECK(std::fabs(*r.first_critical_x - 1.0) < 1e-7);
    CHECK_THROWS(rk_shoot(6, z, 0, 1, 10));
}

TEST_CASE("drift is fourth order in the step") {
    const double z = 0.4;
    const auto coarse = rk_shoot(6, z, std::sqrt(8 * ref::f(6, z)), 2.0, 250);
    const auto fine = rk_shoot(6, z, std::sqrt(8 * ref::f(6, z)), 2.0, 1000);
    CHECK(coarse.hamiltonian_drift / fine.hamiltonian_drift >= 200.0);
    const auto dense = rk_shoot(6, z, std::sqrt(8 * ref::f(6, z)), 2.0, 20000);
    CHECK(dense.hamiltonian_drift < 1e-8);
}

TEST_CASE("verify every state of a six-solution instance") {
    const SolutionSet s = enumerate({6, 1, 2});
    std::vector<BoundState> all{s.type_a};
    all.insert(all.end(), s.type_c.begin(), s.type_c.end());
    for (const auto& st : all) {
        const VerifyReport r = verify_state(st, 1e-6);
        CHECK(r.pass);
        CHECK(r.shoot_residual < 1e-6);
        CHECK(r.kirchhoff_residual < 1e-6);
        CHECK(r.level_drift < 1e-6);
        CHECK(r.ode_residual_max < 1e-6);
    }
}

TEST_CASE("verification flags a perturbed state") {
    BoundState a = solve_type_a({6, 1, 2});
    a.z *= 1.01;
    CHECK(verify_state(a, 1e-6).shoot_residual > 1e-3);
    CHECK_FALSE(verify_state(a, 1e-6).pass);
}

TEST_CASE("constant states verify exactly") {
    const SolutionSet s = enumerate({6, 1, 1});
    for (const auto& c : s.type_c) {
        const VerifyReport r = verify_state(c, 1e-12);
        CHECK(r.shoot_residual < 1e-12);
        CHECK(r.kirchhoff_residual < 1e-12);
        CHECK(r.level_drift < 1e-12);
    }
}

TEST_CASE("negative shifts always change sign first") {
    CHECK(scan_type_b(6, {-1.0}) == std::vector<bool>{true});
    CHECK(scan_type_b(4, {-0.2}) == std::vector<bool>{true});
    CHECK(scan_type_b(8, {-3.0}) == std::vector<bool>{true});
    std::vector<double> ys;
    for (int i = 1; i <= 20; ++i) ys.push_back(-0.25 * i);
    for (bool b : scan_type_b(5, ys)) CHECK(b);
}

TEST_CASE("finite-difference weights") {
    const auto w = fd_weights(0.0, {-1, 0, 1}, 2);
    CHECK(w[0] == Approx(1));
    CHECK(w[1] == Approx(-2));
    CHECK(w[2] == Approx(1));
}
