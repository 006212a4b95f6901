#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "pfun/numerics.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace pfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
// pi_3 / 2 = pi / (3 sin(pi/3))
constexpr double kHalfPi3 = 1.2091995761561452;
}  // namespace

TEST_CASE("integrate: constants and smooth integrands") {
    CHECK_THAT(integrate([](double) { return 1.0; }, Interval(0.0, 1.0)),
               WithinAbs(1.0, 1e-13));
    CHECK_THAT(integrate([](double t) { return std::exp(t); }, Interval(0.0, 1.0)),
               WithinAbs(std::exp(1.0) - 1.0, 1e-12));
}

TEST_CASE("integrate: algebraic endpoint singularities") {
    // one-argument integrands cannot resolve the sub-ulp tail at the
    // singular endpoint, so ask for the documented achievable tolerance
    NumericConfig loose;
    loose.abs_tol = 1e-7;

    // classical arcsin(1): (1 - t^2)^{-1/2} on [0, 1]
    const double arc2 = integrate(
        [](double t) { return 1.0 / std::sqrt((1.0 - t) * (1.0 + t)); }, Interval(0.0, 1.0),
        loose);
    CHECK_THAT(arc2, WithinAbs(kPi / 2.0, 1e-7));

    // cube-root counterpart; closed form pi_3/2 = pi/(3 sin(pi/3))
    const double arc3 = integrate(
        [](double t) { return std::pow((1.0 - t) * (1.0 + t + t * t), -1.0 / 3.0); },
        Interval(0.0, 1.0), loose);
    CHECK_THAT(arc3, WithinAbs(kHalfPi3, 1e-7));

    // the two-argument form resolves the endpoint distance exactly and
    // recovers full precision
    const double arc2_full = integrate(
        [](double t, double d) {
            const double w = d < 0.0 ? -d : 1.0 - t;
            return 1.0 / std::sqrt(w * (1.0 + t));
        },
        Interval(0.0, 1.0));
    CHECK_THAT(arc2_full, WithinAbs(kPi / 2.0, 1e-12));

    const double arc3_full = integrate(
        [](double t, double d) {
            const double w = d < 0.0 ? -d : 1.0 - t;
            return std::pow(w * (1.0 + t + t * t), -1.0 / 3.0);
        },
        Interval(0.0, 1.0));
    CHECK_THAT(arc3_full, WithinAbs(kHalfPi3, 1e-12));
}

TEST_CASE("integrate: exact on polynomials of degree <= 6") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coin(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double c[7];
        for (double& ci : c) ci = coin(rng);
        auto poly = [&](double t) {
            double v = 0.0;
            for (int k = 6; k >= 0; --k) v = v * t + c[k];
            return v;
        };
        double exact = 0.0;  // antiderivative at 1 minus at 0
        for (int k = 0; k <= 6; ++k) exact += c[k] / (k + 1);
        CHECK_THAT(integrate(poly, Interval(0.0, 1.0)), WithinAbs(exact, 1e-12));
    }
}

TEST_CASE("integrate: additive over subdivision") {
    auto f = [](double t) { return std::exp(-t) * std::cos(3.0 * t); };
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mid(0.3, 1.7);
    for (int trial = 0; trial < 10; ++trial) {
        const double b = mid(rng);
        const double whole = integrate(f, Interval(0.0, 2.0));
        const double split =
            integrate(f, Interval(0.0, b)) + integrate(f, Interval(b, 2.0));
        CHECK_THAT(split, WithinAbs(whole, 1e-11));
    }
}

TEST_CASE("integrate: interior NaN is a domain error") {
    auto bad = [](double t) {
        return t > 0.4 && t < 0.6 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    };
    CHECK_THROWS_AS(integrate(bad, Interval(0.0, 1.0)), domain_error);
}

TEST_CASE("integrate: divergent integrand fails to converge") {
    CHECK_THROWS_AS(integrate([](double t) { return 1.0 / t; }, Interval(0.0, 1.0)),
                    convergence_error);
}

TEST_CASE("solve_bracketed: classical roots") {
    SECTION("sqrt(2) via Newton") {
        auto r = solve_bracketed([](double x) { return x * x - 2.0; },
                                 [](double x) { return 2.0 * x; }, Interval(1.0, 2.0));
        CHECK_THAT(r.root, WithinAbs(std::sqrt(2.0), 1e-12));
        CHECK(r.residual <= 1e-12);
    }
    SECTION("odd function through zero, secant") {
        auto r = solve_bracketed([](double x) { return x; }, Interval(-1.0, 1.0));
        CHECK_THAT(r.root, WithinAbs(0.0, 1e-12));
    }
    SECTION("tan x = 1") {
        auto r = solve_bracketed([](double x) { return std::tan(x) - 1.0; },
                                 Interval(0.0, 1.5));
        CHECK_THAT(r.root, WithinAbs(kPi / 4.0, 1e-12));
    }
}

TEST_CASE("solve_bracketed: stays inside the bracket") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> shift(-0.8, 0.8);
    for (int trial = 0; trial < 25; ++trial) {
        const double s = shift(rng);
        auto f = [s](double x) { return std::atan(4.0 * (x - s)); };
        auto r = solve_bracketed(f, Interval(-1.0, 1.0));
        CHECK(r.root >= -1.0);
        CHECK(r.root <= 1.0);
        CHECK(std::fabs(f(r.root)) <= 1e-10);
        CHECK_THAT(r.root, WithinAbs(s, 1e-10));
    }
}

TEST_CASE("solve_bracketed: no sign change is a bracket error") {
    CHECK_THROWS_AS(
        solve_bracketed([](double x) { return x * x + 1.0; }, Interval(-1.0, 1.0)),
        bracket_error);
}

TEST_CASE("solve_bracketed: max_iter exceeded carries the best estimate") {
    NumericConfig cfg;
    cfg.abs_tol = 1e-15;
    cfg.max_iter = 3;
    try {
        solve_bracketed([](double x) { return std::cos(x) - x; }, Interval(0.0, 1.0), cfg);
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        CHECK(e.estimate() > 0.0);
        CHECK(e.estimate() < 1.0);
    }
}

TEST_CASE("central_diff: polynomial and classical derivatives") {
    CHECK_THAT(central_diff([](double x) { return x * x; }, 3.0), WithinAbs(6.0, 1e-8));
    CHECK_THAT(central_diff([](double x) { return std::sin(x); }, 0.0),
               WithinAbs(1.0, 1e-8));
    CHECK_THAT(central_diff([](double x) { return std::exp(x); }, 1.0),
               WithinAbs(std::exp(1.0), 1e-6));
    CHECK_THAT(central_diff([](double x) { return x * x * x; }, 2.0),
               WithinAbs(12.0, 1e-6));
}

TEST_CASE("central_diff: stencil failure is a domain error") {
    CHECK_THROWS_AS(central_diff([](double x) { return std::sqrt(x); }, 0.0), domain_error);
}

TEST_CASE("kernels are safe to call concurrently") {
    const double serial = integrate([](double t) { return std::cos(t * t); }, Interval(0.0, 2.0));
    const double serial_root =
        solve_bracketed([](double x) { return std::cos(x) - x; }, Interval(0.0, 1.0)).root;
    std::vector<std::thread> workers;
    std::array<double, 8> results{};
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([&, i] {
            const double v =
                integrate([](double t) { return std::cos(t * t); }, Interval(0.0, 2.0));
            const double r =
                solve_bracketed([](double x) { return std::cos(x) - x; }, Interval(0.0, 1.0))
                    .root;
            results[i] = v + r;
        });
    for (auto& w : workers) w.join();
    for (double v : results) CHECK(v == serial + serial_root);
}

TEST_CASE("configuration and interval invariants are enforced") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), domain_error);
    CHECK_THROWS_AS(Interval(2.0, 1.0), domain_error);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), domain_error);

    NumericConfig cfg;
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, Interval(0.0, 1.0), cfg),
                    domain_error);
    cfg = NumericConfig{};
    cfg.max_iter = 0;
    CHECK_THROWS_AS(solve_bracketed([](double x) { return x; }, Interval(-1.0, 1.0), cfg),
                    domain_error);
}
