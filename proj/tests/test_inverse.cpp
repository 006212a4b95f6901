#include <catch_amalgamated.hpp>

#include <cmath>

#include "pfun/inverse_pfunctions.hpp"

using Catch::Matchers::WithinAbs;
using namespace pfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kPSample[] = {1.5, 2.0, 3.0, 5.0, 10.0};

// plain composite Simpson, used as an independent quadrature oracle
template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s4 = 0.0, s2 = 0.0;
    for (int i = 1; i < n; i += 2) s4 += f(a + i * h);
    for (int i = 2; i < n; i += 2) s2 += f(a + i * h);
    return h / 3.0 * (f(a) + f(b) + 4.0 * s4 + 2.0 * s2);
}
}  // namespace

TEST_CASE("arcsin_p: endpoints and classical reduction") {
    for (double p : kPSample) {
        CHECK(arcsin_p(PParam(p), 0.0) == 0.0);
        CHECK(arcsin_p(PParam(p), 1.0) == 0.5 * pi_p(PParam(p)));
    }
    CHECK_THAT(arcsin_p(PParam(2.0), 0.5), WithinAbs(kPi / 6.0, 1e-12));
    CHECK_THROWS_AS(arcsin_p(PParam(2.0), -0.1), domain_error);
    CHECK_THROWS_AS(arcsin_p(PParam(2.0), 1.1), domain_error);
}

TEST_CASE("arccos_p: endpoints, classical reduction, defining relation") {
    const PParam p3(3.0);
    CHECK(arccos_p(p3, 1.0) == 0.0);
    CHECK(arccos_p(p3, 0.0) == 0.5 * pi_p(p3));
    CHECK_THAT(arccos_p(PParam(2.0), 0.5), WithinAbs(kPi / 3.0, 1e-12));
    // defining substitution, exact by construction
    for (double x : {0.1, 0.4, 0.7, 0.95}) {
        const double y = std::pow(detail::one_minus_pow(x, 3.0), 1.0 / 3.0);
        CHECK(arccos_p(p3, x) == arcsin_p(p3, y));
    }
    CHECK_THROWS_AS(arccos_p(p3, 2.0), domain_error);
}

TEST_CASE("arctan_p: endpoints and classical reduction") {
    CHECK(arctan_p(PParam(3.0), 0.0) == 0.0);
    CHECK_THAT(arctan_p(PParam(2.0), 1.0), WithinAbs(kPi / 4.0, 1e-12));
    CHECK_THROWS_AS(arctan_p(PParam(2.0), 1.5), domain_error);
}

TEST_CASE("arcsinh_p: classical reduction and extended domain") {
    CHECK(arcsinh_p(PParam(5.0), 0.0) == 0.0);
    CHECK_THAT(arcsinh_p(PParam(2.0), 1.0), WithinAbs(std::asinh(1.0), 1e-12));
    for (double x : {2.0, 10.0, 1e4, 1e10})
        CHECK_THAT(arcsinh_p(PParam(2.0), x), WithinAbs(std::asinh(x), 1e-11));
    CHECK_THROWS_AS(arcsinh_p(PParam(2.0), -0.5), domain_error);
}

TEST_CASE("arctanh_p: classical reduction and quadrature oracle") {
    CHECK(arctanh_p(PParam(3.0), 0.0) == 0.0);
    CHECK_THAT(arctanh_p(PParam(2.0), 0.5), WithinAbs(0.5 * std::log(3.0), 1e-12));
    CHECK_THAT(arctanh_p(PParam(2.0), 0.5), WithinAbs(0.5493061443340548, 1e-12));

    // independent oracle for p = 3: high-resolution composite Simpson
    const double oracle =
        simpson([](double t) { return 1.0 / (1.0 - t * t * t); }, 0.0, 0.5, 20000);
    const double val = arctanh_p(PParam(3.0), 0.5);
    CHECK_THAT(val, WithinAbs(oracle, 1e-11));
    CHECK_THAT(val, WithinAbs(0.5168491839429993, 1e-12));

    CHECK_THROWS_AS(arctanh_p(PParam(3.0), 1.0), domain_error);
    CHECK_THROWS_AS(arctanh_p(PParam(3.0), 1.2), domain_error);
}

TEST_CASE("inverse functions: strictly monotone on their domains") {
    for (double p : kPSample) {
        const PParam pp(p);
        for (InverseKind kind : {InverseKind::ArcsinP, InverseKind::ArccosP,
                                 InverseKind::ArctanP, InverseKind::ArcsinhP,
                                 InverseKind::ArctanhP}) {
            const double hi = kind == InverseKind::ArctanhP ? 0.999 : 1.0;
            // arccos_p starts flat to order x^{p-1}, below double resolution
            // for large p; sample where the decrease is representable
            const double lo = kind == InverseKind::ArccosP ? 0.3 : 0.001;
            double prev = inverse_eval(kind, pp, lo);
            for (int k = 1; k <= 40; ++k) {
                const double x = lo + (hi - lo) * k / 40.0;
                const double v = inverse_eval(kind, pp, x);
                if (kind == InverseKind::ArccosP)
                    CHECK(v < prev);  // decreasing: integral limit shrinks with x
                else
                    CHECK(v > prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("inverse functions: p = 2 matches the classical functions") {
    const PParam p2(2.0);
    for (int k = 0; k < 100; ++k) {
        const double x = (k + 0.5) / 100.0;
        CHECK_THAT(arcsin_p(p2, x), WithinAbs(std::asin(x), 1e-10));
        CHECK_THAT(arccos_p(p2, x), WithinAbs(std::acos(x), 1e-10));
        CHECK_THAT(arctan_p(p2, x), WithinAbs(std::atan(x), 1e-10));
        CHECK_THAT(arcsinh_p(p2, x), WithinAbs(std::asinh(x), 1e-10));
        CHECK_THAT(arctanh_p(p2, x), WithinAbs(std::atanh(x), 1e-10));
    }
}

TEST_CASE("arctan_p and arcsinh_p approach b_p and c_p at the right endpoint") {
    for (double p : kPSample) {
        const PParam pp(p);
        CHECK_THAT(arctan_p(pp, 1.0 - 1e-8), WithinAbs(b_p(pp), 1e-8));
        CHECK_THAT(arcsinh_p(pp, 1.0 - 1e-8), WithinAbs(c_p(pp), 1e-8));
    }
}
