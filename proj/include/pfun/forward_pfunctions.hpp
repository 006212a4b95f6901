#pragma once

// Forward p-functions, obtained by numerically inverting the monotone inverse
// integrals. Inversion gives per-point error control (quadrature tolerance +
// root tolerance) with no accumulation, unlike ODE time-stepping.
//
// Principal domains:
//   sin_p, cos_p : [0, pi_p/2]
//   tan_p        : [0, pi_p/2)
//   sinh_p, cosh_p : [0, hyperbolic_cap]
//   tanh_p       : [0, inf), asymptotically 1 beyond the cap
//
// No signed or periodic extensions: all |.|^p powers act on non-negative
// quantities and are implemented as plain powers.

#include <cmath>
#include <vector>

#include "pfun/inverse_pfunctions.hpp"
#include "pfun/numerics.hpp"
#include "pfun/special_constants.hpp"

namespace pfun {

enum class FunctionKind { SinP, CosP, TanP, SinhP, CoshP, TanhP };

/// sinh_p and cosh_p are evaluated up to this argument; sinh_p grows like
/// e^x, so far beyond it the identities degenerate in double precision.
inline constexpr double hyperbolic_cap = 30.0;

namespace detail {

// (1 + s^p)^{1/p}, stable for any s >= 0.
inline double cosh_from_sinh(double s, double p) {
    if (s <= 1.0) return std::exp(std::log1p(std::pow(s, p)) / p);
    return s * std::exp(std::log1p(std::pow(s, -p)) / p);
}

// gamma_p = lim_{x->inf} (arcsinh_p^{-1} scale): arcsinh_p(s) - ln s. Used by
// the large-argument tanh_p asymptotic 1 - e^{-p(x - gamma_p)}/p.
inline double log_shift(PParam p, const NumericConfig& cfg) {
    const double pv = p.value();
    const double v_max = 45.0 / pv;
    const double k = integrate(
        [&](double v) { return -std::expm1(-std::log1p(std::exp(-pv * v)) / pv); },
        Interval(0.0, v_max), cfg);
    return c_p(p) - k;
}

}  // namespace detail

/// Inverts arcsin_p on [0, 1] by safeguarded Newton with the analytic
/// derivative (1-s^p)^{-1/p}; the initial guess is the classical sine
/// rescaled to the p-period.
inline double sin_p(PParam p, double x, const NumericConfig& cfg = {}) {
    const double half_pi_p = 0.5 * pi_p(p);
    if (!(x >= 0.0) || !(x <= half_pi_p))
        throw domain_error("sin_p: x must lie in [0, pi_p/2]");
    if (x == 0.0) return 0.0;
    if (x == half_pi_p) return 1.0;
    const double pv = p.value();
    const double guess = std::sin(x * 1.5707963267948966 / half_pi_p);
    const RootResult r = solve_bracketed(
        [&](double s) { return arcsin_p(p, s, cfg) - x; },
        [&](double s) { return std::pow(detail::one_minus_pow(s, pv), -1.0 / pv); },
        Interval(0.0, 1.0), guess, cfg);
    return r.root;
}

inline double cos_p(PParam p, double x, const NumericConfig& cfg = {}) {
    const double half_pi_p = 0.5 * pi_p(p);
    if (!(x >= 0.0) || !(x <= half_pi_p))
        throw domain_error("cos_p: x must lie in [0, pi_p/2]");
    const double pv = p.value();
    return std::pow(detail::one_minus_pow(sin_p(p, x, cfg), pv), 1.0 / pv);
}

inline double tan_p(PParam p, double x, const NumericConfig& cfg = {}) {
    const double half_pi_p = 0.5 * pi_p(p);
    if (!(x >= 0.0) || !(x < half_pi_p))
        throw domain_error("tan_p: x must lie in [0, pi_p/2)");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    const double s = sin_p(p, x, cfg);
    return s / std::pow(detail::one_minus_pow(s, pv), 1.0 / pv);
}

/// Inverts arcsinh_p. Beyond s = 1 the bracket [1, s_hi] is grown by
/// doubling s_hi until arcsinh_p(s_hi) exceeds x; the cheap upper bound
/// arcsinh_p(s) <= c_p + ln s skips quadrature for most of the doublings.
inline double sinh_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0) || !(x <= hyperbolic_cap))
        throw domain_error("sinh_p: x must lie in [0, hyperbolic_cap]");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    auto g = [&](double s) { return arcsinh_p(p, s, cfg) - x; };
    auto dg = [&](double s) {
        if (s <= 1.0) return std::exp(-std::log1p(std::pow(s, pv)) / pv);
        return std::exp(-std::log1p(std::pow(s, -pv)) / pv) / s;
    };
    const double cp = c_p(p);
    if (x <= cp) {
        const double guess = std::min(std::sinh(x), 0.999999);
        return solve_bracketed(g, dg, Interval(0.0, 1.0), guess, cfg).root;
    }
    double s_lo = 1.0, s_hi = 2.0;
    while (cp + std::log(s_hi) <= x || g(s_hi) <= 0.0) {
        s_lo = s_hi;
        s_hi *= 2.0;
    }
    const double guess = s_lo * std::exp(x - arcsinh_p(p, s_lo, cfg));
    return solve_bracketed(g, dg, Interval(s_lo, s_hi), guess, cfg).root;
}

inline double cosh_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0) || !(x <= hyperbolic_cap))
        throw domain_error("cosh_p: x must lie in [0, hyperbolic_cap]");
    return detail::cosh_from_sinh(sinh_p(p, x, cfg), p.value());
}

inline double tanh_p(PParam p, double x, const NumericConfig& cfg = {}) {
    if (!(x >= 0.0))
        throw domain_error("tanh_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double pv = p.value();
    if (x > hyperbolic_cap) {
        // 1 - tanh_p ~ e^{-p(x - gamma_p)}/p; below 1 ulp this rounds to 1.
        const double eps = std::exp(-pv * (x - detail::log_shift(p, cfg))) / pv;
        return 1.0 - eps;
    }
    const double s = sinh_p(p, x, cfg);
    if (s <= 1.0) return s / std::exp(std::log1p(std::pow(s, pv)) / pv);
    return std::exp(-std::log1p(std::pow(s, -pv)) / pv);
}

inline double forward_eval(FunctionKind kind, PParam p, double x, const NumericConfig& cfg = {}) {
    switch (kind) {
        case FunctionKind::SinP: return sin_p(p, x, cfg);
        case FunctionKind::CosP: return cos_p(p, x, cfg);
        case FunctionKind::TanP: return tan_p(p, x, cfg);
        case FunctionKind::SinhP: return sinh_p(p, x, cfg);
        case FunctionKind::CoshP: return cosh_p(p, x, cfg);
        case FunctionKind::TanhP: return tanh_p(p, x, cfg);
    }
    throw domain_error("forward_eval: unknown kind");
}

/// Analytic first derivatives:
///   sin_p'  = cos_p                 cos_p'  = -cos_p^{2-p} sin_p^{p-1}
///   tan_p'  = 1 + tan_p^p           sinh_p' = cosh_p
///   cosh_p' = cosh_p^{2-p} sinh_p^{p-1}      tanh_p' = 1 - tanh_p^p
inline double derivative_eval(FunctionKind kind, PParam p, double x,
                              const NumericConfig& cfg = {}) {
    const double pv = p.value();
    switch (kind) {
        case FunctionKind::SinP: return cos_p(p, x, cfg);
        case FunctionKind::CosP: {
            const double s = sin_p(p, x, cfg);
            const double c = std::pow(detail::one_minus_pow(s, pv), 1.0 / pv);
            return -std::pow(c, 2.0 - pv) * std::pow(s, pv - 1.0);
        }
        case FunctionKind::TanP: return 1.0 + std::pow(tan_p(p, x, cfg), pv);
        case FunctionKind::SinhP: return cosh_p(p, x, cfg);
        case FunctionKind::CoshP: {
            const double s = sinh_p(p, x, cfg);
            const double c = detail::cosh_from_sinh(s, pv);
            return std::pow(c, 2.0 - pv) * std::pow(s, pv - 1.0);
        }
        case FunctionKind::TanhP: return 1.0 - std::pow(tanh_p(p, x, cfg), pv);
    }
    throw domain_error("derivative_eval: unknown kind");
}

/// Rayleigh-quotient profile of the one-dimensional p-Laplacian
/// -(|u'|^{p-2}u')' = lambda |u|^{p-2}u, u(0)=u(1)=0, for the candidate
/// eigenfunction u(t) = sin_p(pi_p t). Returns lambda at the interior grid
/// points t_i = i/(n+1); a numerically constant profile certifies the
/// eigenfunction property. The flux |u'|^{p-2}u' is differentiated by a
/// central difference (step 1e-4); u and u' themselves are analytic.
inline std::vector<double> plaplacian_lambda_profile(PParam p, int n,
                                                     const NumericConfig& cfg = {}) {
    if (n < 8) throw domain_error("plaplacian_lambda_profile: n must be >= 8");
    const double pv = p.value();
    const double period = pi_p(p);
    // u rises on [0, 1/2] and mirrors onto [1/2, 1]
    auto u = [&](double t) {
        return t <= 0.5 ? sin_p(p, period * t, cfg) : sin_p(p, period * (1.0 - t), cfg);
    };
    auto du = [&](double t) {
        if (t == 0.5) return 0.0;
        return t < 0.5 ? period * cos_p(p, period * t, cfg)
                       : -period * cos_p(p, period * (1.0 - t), cfg);
    };
    auto flux = [&](double t) {
        const double d = du(t);
        const double mag = std::pow(std::fabs(d), pv - 1.0);
        return d < 0.0 ? -mag : mag;
    };
    const double h = 1e-4;
    std::vector<double> lambda;
    lambda.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const double t = static_cast<double>(i) / (n + 1);
        const double dflux = (flux(t + h) - flux(t - h)) / (2.0 * h);
        lambda.push_back(-dflux / std::pow(u(t), pv - 1.0));
    }
    return lambda;
}

}  // namespace pfun
