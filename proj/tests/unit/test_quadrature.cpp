#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tgraph/core_math.hpp"
#include "tgraph/errors.hpp"
#include "tgraph/quadrature.hpp"

using namespace tgraph;
using doctest::Approx;

TEST_CASE("singular integrals with known values") {
    SingularIntegral lower{0.0, 1.0, [](double t, double, double) { return 1.0 / std::sqrt(t); }, SingularEnds::lower, 1e-10};
    const QuadResult r1 = integrate(lower, default_quad_options());
    CHECK(std::fabs(r1.value - 2.0) < 1e-10);
    CHECK(r1.error < 1e-10);

    SingularIntegral both{0.0, 1.0, [](double, double a, double b) { return 1.0 / std::sqrt(a * b); }, SingularEnds::both, 1e-10};
    CHECK(std::fabs(integrate(both) - ref::pi) < 1e-10);

    SingularIntegral smooth{0.0, 1.0, [](double t, double, double) { return t * t; }, SingularEnds::none, 1e-10};
    CHECK(std::fabs(integrate(smooth) - 1.0 / 3.0) < 1e-12);

    SingularIntegral upper{0.0, 1.0, [](double, double, double b) { return 1.0 / std::sqrt(b); }, SingularEnds::upper, 1e-10};
    CHECK(std::fabs(integrate(upper) - 2.0) < 1e-10);
}

TEST_CASE("substitution agrees with naive quadrature plus analytic tail") {
    const double delta = 1e-6;
    // int_delta^1 t^{-1/2} by Simpson on a log-spaced variable, tail 2 sqrt(delta)
    const double naive = ref::simpson([](double s) { return std::exp(s) / std::sqrt(std::exp(s)); }, std::log(delta), 0.0, 20000);
    SingularIntegral spec{0.0, 1.0, [](double t, double, double) { return 1.0 / std::sqrt(t); }, SingularEnds::lower, 1e-10};
    CHECK(std::fabs(integrate(spec) - (naive + 2.0 * std::sqrt(delta))) < 10 * 1e-10);
}

TEST_CASE("polynomials up to degree ten are exact") {
    for (int deg = 0; deg <= 10; ++deg) {
        SingularIntegral spec{0.0, 1.0, [deg](double t, double, double) { return std::pow(t, deg); }, SingularEnds::none, 1e-10};
        CHECK(std::fabs(integrate(spec) - 1.0 / (deg + 1)) < 1e-10);
    }
}

TEST_CASE("bad specifications and budget exhaustion") {
    SingularIntegral bad{1.0, 0.0, [](double, double, double) { return 1.0; }, SingularEnds::none, 1e-10};
    CHECK_THROWS_AS(integrate(bad), DomainError);
    QuadOptions tight;
    tight.abs_tol = 1e-15;
    tight.max_intervals = 2;
    tight.max_depth = 1;
    bool thrown = false;
    try {
        adaptive_integrate([](double t) { return std::sin(200.0 * t) / (t + 1e-3); }, 0.0, 1.0, tight);
    } catch (const NonconvergenceError& e) {
        thrown = true;
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error() > 0.0);
    }
    CHECK(thrown);
}

TEST_CASE("half-line moments") {
    const Soliton s6(6, 1);
    const double r3 = std::sqrt(3.0);
    CHECK(halfline_moment(s6, 0, 2) == Approx(r3 * ref::pi / 4).epsilon(1e-12));
    CHECK(halfline_moment(s6, 0, 6) == Approx(3 * r3 * ref::pi / 8).epsilon(1e-12));
    // raw truncated quadrature written here
    const double trunc = ref::simpson([](double x) { return std::pow(ref::soliton(6, x), 6); }, 0.0, 40.0, 40000);
    CHECK(halfline_moment(s6, 0, 6) == Approx(trunc).epsilon(1e-10));
    CHECK(halfline_moment_truncated(s6, 0, 6, 40) == Approx(trunc).epsilon(1e-10));
    CHECK(halfline_moment(s6, 30, 2) < 1e-20);
    CHECK(halfline_moment(s6, -1.0, 2) == Approx(ref::simpson([](double x) { return std::pow(ref::soliton(6, x - 1.0), 2); }, 0.0, 40.0, 40000)).epsilon(1e-10));
}

TEST_CASE("half-line moments decrease in the shift") {
    for (double p : {3.0, 4.0, 6.0, 8.0}) {
        const Soliton s(p, 1);
        double prev = HUGE_VAL;
        for (int i = 0; i < 50; ++i) {
            const double y = 10.0 * i / 49.0;
            const double m = halfline_moment(s, y, 2);
            CHECK(m < prev);
            prev = m;
        }
    }
}

TEST_CASE("half-line gradient and the line Pohozaev identity") {
    const Soliton s6(6, 1);
    CHECK(halfline_gradient(s6, 0) == Approx(std::sqrt(3.0) * ref::pi / 8).epsilon(1e-12));
    const double trunc = ref::simpson(
        [](double x) {
            const double h = 1e-4;
            const double d = (ref::soliton(6, x + h) - ref::soliton(6, x - h)) / (2 * h);
            return d * d;
        },
        0.0, 40.0, 40000);
    CHECK(halfline_gradient(s6, 0) == Approx(trunc).epsilon(1e-7));
    CHECK(halfline_gradient(s6, 40) < 1e-30);
    for (double p : {3.0, 4.0, 6.0, 8.0}) {
        const Soliton s(p, 1);
        const double lhs = 2 * halfline_gradient(s, 0), rhs = (p - 2) / (2 * p) * 2 * halfline_moment(s, 0, p);
        CHECK(std::fabs(lhs - rhs) <= 1e-8 * rhs);
    }
}

TEST_CASE("fixed Gauss-Legendre panels") {
    CHECK(gauss_legendre([](double x) { return std::exp(x); }, 0, 1, 4) == Approx(std::exp(1.0) - 1).epsilon(1e-15));
    CHECK(gauss_legendre([](double x) { return std::pow(x, 19); }, 0, 1, 1, 10) == Approx(0.05).epsilon(1e-14));
}

TEST_CASE("default tolerance override") {
    const double old = default_tolerance();
    set_default_tolerance(1e-8);
    CHECK(default_quad_options().abs_tol == 1e-8);
    set_default_tolerance(old);
    CHECK_THROWS_AS(set_default_tolerance(-1.0), DomainError);
}
