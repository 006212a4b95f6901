#pragma once

// The five generalized inverse functions, each evaluated by tanh-sinh
// quadrature of its defining integral:
//
//   arcsin_p(x)  = int_0^x (1-t^p)^{-1/p} dt          x in [0,1]
//   arccos_p(x)  = arcsin_p((1-x^p)^{1/p})            x in [0,1]
//   arctan_p(x)  = int_0^x (1+t^p)^{-1}  dt           x in [0,1]
//   arcsinh_p(x) = int_0^x (1+t^p)^{-1/p} dt          x >= 0
//   arctanh_p(x) = int_0^x (1-t^p)^{-1}  dt           x in [0,1)
//
// Domains are the principal intervals; there is no signed or periodic
// extension. arcsinh_p accepts any x >= 0 because the forward sinh_p
// inversion needs the extended range.

#include <cmath>

#include "pfun/numerics.hpp"
#include "pfun/special_constants.hpp"

namespace pfun {

enum class InverseKind { ArcsinP, ArccosP, ArctanP, ArcsinhP, ArctanhP };

namespace detail {

// 1 - s^p without cancellation for s in (0, 1].
inline double one_minus_pow(double s, double p) {
    if (s <= 0.0) return 1.0;
    return -std::expm1(p * std::log(s));
}

// Integral over the steep upper end of the arcsin_p integrand: the
// substitution t = (1-s)^{1/p} turns int_x^1 (1-t^p)^{-1/p} dt into
// (1/p) int_0^{1-x^p} s^{-1/p} (1-s)^{1/p-1} ds, whose singularity sits at
// s = 0 where tanh-sinh nodes are exact.
inline double arcsin_upper_tail(double p, double q, const NumericConfig& cfg) {
    if (q <= 0.0) return 0.0;
    const double a = -1.0 / p, b = 1.0 / p - 1.0;
    return integrate([&](double s) { return std::pow(s, a) * std::pow(1.0 - s, b); },
                     Interval(0.0, q), cfg) /
           p;
}

}  // namespace detail

inline double arcsin_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw domain_error("arcsin_p: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    const double half_pi_p = 0.5 * pi_p(p);
    if (x == 1.0) return half_pi_p;
    // Near 1 the integrand blows up at the far end of [0, x]; evaluate the
    // complement through the substituted tail instead.
    if (x > 1.0 - 1e-3)
        return half_pi_p - detail::arcsin_upper_tail(pv, detail::one_minus_pow(x, pv), cfg);
    return integrate(
        [&](double t) { return std::pow(detail::one_minus_pow(t, pv), -1.0 / pv); },
        Interval(0.0, x), cfg);
}

inline double arccos_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw domain_error("arccos_p: x must lie in [0, 1]");
    const double pv = p.value();
    return arcsin_p(p, std::pow(detail::one_minus_pow(x, pv), 1.0 / pv), cfg);
}

inline double arctan_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw domain_error("arctan_p: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    return integrate([&](double t) { return 1.0 / (1.0 + std::pow(t, pv)); },
                     Interval(0.0, x), cfg);
}

inline double arcsinh_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0))
        throw domain_error("arcsinh_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    if (x <= 1.0)
        return integrate(
            [&](double t) { return std::exp(-std::log1p(std::pow(t, pv)) / pv); },
            Interval(0.0, x), cfg);
    // For x > 1 integrate the remainder in log space, where the integrand
    // (1+e^{-p v})^{-1/p} is smooth and bounded however large x gets.
    return c_p(p) + integrate(
                        [&](double v) { return std::exp(-std::log1p(std::exp(-pv * v)) / pv); },
                        Interval(0.0, std::log(x)), cfg);
}

inline double arctanh_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0) || x >= 1.0)
        throw domain_error("arctanh_p: x must lie in [0, 1)");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    // two-argument integrand: as x -> 1 the boundary layer at t = x is
    // steep, and 1 - t^p must be reassembled from the exact node offset
    const double q0 = detail::one_minus_pow(x, pv);  // 1 - x^p
    return integrate(
        [&](double t, double d) {
            if (d < 0.0) {  // t = x + d with d exact
                const double xp_minus_tp = -std::pow(x, pv) * std::expm1(pv * std::log1p(d / x));
                return 1.0 / (q0 + xp_minus_tp);
            }
            return 1.0 / detail::one_minus_pow(t, pv);
        },
        Interval(0.0, x), cfg);
}

inline double inverse_eval(InverseKind kind, PParam p, double x, const NumericConfig& cfg = {}) {
    switch (kind) {
        case InverseKind::ArcsinP: return arcsin_p(p, x, cfg);
        case InverseKind::ArccosP: return arccos_p(p, x, cfg);
        case InverseKind::ArctanP: return arctan_p(p, x, cfg);
        case InverseKind::ArcsinhP: return arcsinh_p(p, x, cfg);
        case InverseKind::ArctanhP: return arctanh_p(p, x, cfg);
    }
    throw domain_error("inverse_eval: unknown kind");
}

}  // namespace pfun
