#pragma once

// Shared numerical kernels: double-exponential (tanh-sinh) quadrature with
// endpoint-singularity support, a safeguarded Newton/bisection root finder,
// and central-difference differentiation. Everything is a pure function over
// caller-supplied callables; safe to invoke concurrently.

#include <cmath>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace pfun {

struct NumericConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;
    double fd_step = 1e-6;
};

class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class bracket_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iteration fails to reach tolerance; carries the best
/// available estimate and the residual/error estimate that was achieved.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double estimate, double error_estimate)
        : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}
    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

/// A finite interval [lo, hi] with lo < hi.
struct Interval {
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
            throw domain_error("Interval requires finite lo < hi");
    }
    double lo;
    double hi;
};

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

namespace detail {

inline void check_config(const NumericConfig& cfg) {
    if (!(cfg.abs_tol > 0) || !(cfg.rel_tol > 0) || cfg.max_iter < 1 || !(cfg.fd_step > 0))
        throw domain_error("NumericConfig: tolerances and fd_step must be positive, max_iter >= 1");
}

// One tanh-sinh node. t is the trapezoid abscissa; the transformed point is
// x = c + d*tanh((pi/2) sinh t). `offset` is the distance from the nearer
// interval endpoint, computed in a cancellation-free form so integrands can
// resolve algebraic endpoint singularities at full precision.
struct DENode {
    double x = 0.0;
    double offset = 0.0;  // distance to the nearer endpoint; 0 when below fp resolution
    bool upper = false;   // nearer endpoint is hi
    double weight = 0.0;  // d * (pi/2) cosh(t) * sech^2(u), without the step h
};

inline DENode de_node(double t, double a, double b) {
    const double half_pi = 1.5707963267948966;
    const double d = 0.5 * (b - a);
    DENode n;
    n.upper = t > 0.0;
    const double u = half_pi * std::sinh(std::fabs(t));
    const double q = std::exp(-2.0 * u);  // in (0, 1]
    n.offset = d * 2.0 * q / (1.0 + q);
    n.weight = d * half_pi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q));
    n.x = n.upper ? b - n.offset : a + n.offset;
    if (t == 0.0) n.x = a + d;
    return n;
}

// Invokes f either as f(x) or as f(x, signed_offset). The signed offset is
// the distance to the nearer endpoint, negative when that endpoint is hi, so
// |1 - x| style quantities can be reconstructed without cancellation.
template <class F>
double de_call(F& f, const DENode& n) {
    if constexpr (std::invocable<F&, double, double>) {
        return f(n.x, n.upper ? -n.offset : n.offset);
    } else {
        return f(n.x);
    }
}

}  // namespace detail

/// Integrates f over iv with the tanh-sinh double-exponential rule. Endpoint
/// algebraic singularities (e.g. (1-t^p)^{-1/p} at t -> 1) converge because
/// the transformed integrand decays double-exponentially and nodes never land
/// on the endpoints.
///
/// f may be callable as f(x) or as f(x, offset), where offset is the signed
/// distance to the nearer endpoint (negative near iv.hi). With the plain f(x)
/// form, a singularity at a nonzero endpoint cannot be resolved past the
/// point where x rounds into the endpoint; the clipped tail is charged to the
/// error estimate (~1e-8 of the result for a square-root singularity), so
/// request a tolerance no tighter than that, or use the two-argument form,
/// which reconstructs the endpoint distance exactly and reaches full
/// precision.
///
/// Returns the integral with estimated error <= max(abs_tol, rel_tol*|I|);
/// throws convergence_error otherwise, and domain_error if f produces a
/// non-finite value away from the endpoints.
template <class F>
    requires std::invocable<F&, double> || std::invocable<F&, double, double>
double integrate(F&& f, const Interval& iv, const NumericConfig& cfg = {}) {
    detail::check_config(cfg);
    const double a = iv.lo, b = iv.hi;
    const double width = b - a;
    const int max_level = 12;
    const double t_cap = 6.5;  // past this the node weight underflows anyway

    long double total = 0.0L;  // sum of weight*f over all nodes seen so far
    double h = 1.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double err = std::numeric_limits<double>::infinity();
    double clip_bias = 0.0;   // estimated mass lost to nodes clipped at an endpoint
    double last_fo = 0.0;     // |f|*offset at the outermost kept node of this sweep

    auto add_node = [&](double t) -> bool {
        // returns false once the node's contribution is below resolution
        detail::DENode n = detail::de_node(t, a, b);
        if (n.offset == 0.0 || n.weight == 0.0) return false;
        if constexpr (!std::invocable<F&, double, double>) {
            if (n.x <= a || n.x >= b) {
                // rounded into an endpoint: the remaining tail is invisible
                // to a one-argument integrand; charge it to the error
                clip_bias = std::max(clip_bias, 2.0 * last_fo);
                return false;
            }
        }
        const double fv = detail::de_call(f, n);
        if (!std::isfinite(fv)) {
            // Tolerated only while hugging an endpoint, where an integrable
            // singularity may overflow before its weight underflows.
            if (n.offset < 1e-12 * width) return true;
            throw domain_error("integrate: integrand returned a non-finite value in the interior");
        }
        total += static_cast<long double>(n.weight) * fv;
        last_fo = std::fabs(fv) * n.offset;
        return true;
    };

    for (int level = 0; level <= max_level; ++level) {
        clip_bias = 0.0;
        if (level == 0) {
            add_node(0.0);
            for (int sign = -1; sign <= 1; sign += 2) {
                last_fo = 0.0;
                for (int k = 1; k * h <= t_cap; ++k)
                    if (!add_node(sign * k * h)) break;
            }
        } else {
            h *= 0.5;
            for (int sign = -1; sign <= 1; sign += 2) {
                last_fo = 0.0;
                for (int k = 1; (2 * k - 1) * h <= t_cap; ++k)
                    if (!add_node(sign * (2 * k - 1) * h)) break;
            }
        }
        const double estimate = static_cast<double>(total) * h;
        if (level >= 2) {
            err = std::fabs(estimate - prev) + clip_bias;
            if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(estimate)))
                return estimate;
        }
        prev = estimate;
    }
    throw convergence_error("integrate: tanh-sinh refinement did not converge", prev, err);
}

namespace detail {

// Safeguarded bracketed solve. `slope(x, fx, x_prev, f_prev)` supplies a
// derivative estimate at the current iterate (analytic, or secant through the
// last two iterates); steps leaving the bracket fall back to bisection, and
// after 5 rejected steps the solve turns into pure bisection. x0, when finite
// and inside the bracket, seeds the iteration.
template <class F, class Slope>
RootResult solve_core(F& f, Slope slope, const Interval& iv, const NumericConfig& cfg,
                      double x0 = std::numeric_limits<double>::quiet_NaN()) {
    check_config(cfg);
    double lo = iv.lo, hi = iv.hi;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if (std::signbit(flo) == std::signbit(fhi))
        throw bracket_error("solve_bracketed: f(lo) and f(hi) must differ in sign");

    double x = (std::isfinite(x0) && x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
    double fx = f(x);
    double x_prev = std::fabs(fx - flo) > std::fabs(fx - fhi) ? lo : hi;
    double f_prev = x_prev == lo ? flo : fhi;
    int rejected = 0;
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        if (std::fabs(fx) <= cfg.abs_tol || hi - lo <= cfg.abs_tol)
            return {x, std::fabs(fx), iter};
        // shrink the bracket around the root
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        double next = 0.0;
        bool use_bisect = rejected >= 5;
        if (!use_bisect) {
            const double m = slope(x, fx, x_prev, f_prev);
            next = x - fx / m;
            if (!std::isfinite(next) || next <= lo || next >= hi) {
                use_bisect = true;
                ++rejected;
            }
        }
        if (use_bisect) next = 0.5 * (lo + hi);
        x_prev = x;
        f_prev = fx;
        x = next;
        fx = f(x);
    }
    throw convergence_error("solve_bracketed: max_iter exceeded", x, std::fabs(fx));
}

}  // namespace detail

/// Root of f on iv (which must bracket a sign change), by Newton steps
/// safeguarded inside a shrinking bisection bracket. df is the analytic
/// derivative of f.
template <class F, class DF>
    requires std::invocable<F&, double> && std::invocable<DF&, double>
RootResult solve_bracketed(F&& f, DF&& df, const Interval& iv, const NumericConfig& cfg = {}) {
    return detail::solve_core(
        f, [&](double x, double, double, double) { return df(x); }, iv, cfg);
}

/// As above, starting from an explicit initial guess inside the bracket.
template <class F, class DF>
    requires std::invocable<F&, double> && std::invocable<DF&, double>
RootResult solve_bracketed(F&& f, DF&& df, const Interval& iv, double initial_guess,
                           const NumericConfig& cfg = {}) {
    return detail::solve_core(
        f, [&](double x, double, double, double) { return df(x); }, iv, cfg, initial_guess);
}

/// Derivative-free variant: secant slope through the bracket, same safeguards.
template <class F>
    requires std::invocable<F&, double>
RootResult solve_bracketed(F&& f, const Interval& iv, const NumericConfig& cfg = {}) {
    return detail::solve_core(
        f,
        [](double x, double fx, double x_prev, double f_prev) {
            return (fx - f_prev) / (x - x_prev);
        },
        iv, cfg);
}

/// Central difference (f(x+h) - f(x-h)) / 2h with h = fd_step * max(1, |x|).
template <class F>
    requires std::invocable<F&, double>
double central_diff(F&& f, double x, const NumericConfig& cfg = {}) {
    detail::check_config(cfg);
    const double h = cfg.fd_step * std::max(1.0, std::fabs(x));
    const double fp = f(x + h), fm = f(x - h);
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw domain_error("central_diff: function not evaluable at a stencil point");
    return (fp - fm) / (2.0 * h);
}

}  // namespace pfun
