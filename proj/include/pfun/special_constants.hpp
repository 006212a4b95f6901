#pragma once

// Classical special functions (beta, digamma, Gauss 2F1) and the constants
// pi_p, b_p, c_p of the generalized trigonometric family. Each constant has
// at least two independent evaluation routes; the alternates are exposed so
// tests can cross-validate them.

#include <cmath>

#include "pfun/numerics.hpp"

namespace pfun {

/// The family parameter p > 1. Construction validates once so downstream
/// code can assume a usable value.
class PParam {
public:
    explicit PParam(double p) : p_(p) {
        if (!std::isfinite(p) || !(p > 1.0))
            throw domain_error("PParam: p must be a finite real > 1");
    }
    double value() const noexcept { return p_; }

private:
    double p_;
};

/// B(a, b) for a, b > 0, via log-gamma so large arguments cannot overflow.
inline double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("beta: arguments must be positive");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

/// Digamma for x > 0: upward recurrence pushes the argument to >= 6, then the
/// asymptotic series truncated at the 1/x^14 (B14) term. Uniformly ~1e-12
/// accurate over the range used here (arguments down to 1/(2p) ~ 0.005).
inline double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw domain_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 6.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_{2n}/(2n x^{2n}), n = 1..7
    static constexpr double coef[] = {-1.0 / 12.0,  1.0 / 120.0,     -1.0 / 252.0, 1.0 / 240.0,
                                      -1.0 / 132.0, 691.0 / 32760.0, -1.0 / 12.0};
    double series = 0.0, pw = 1.0;
    for (double c : coef) {
        pw *= inv2;
        series += c * pw;
    }
    return acc + std::log(x) - 0.5 * inv + series;
}

/// Gauss hypergeometric 2F1(a, b; c; z) by direct power series, restricted to
/// |z| <= 1/2 (all this library needs); terms stop once below 1e-16 of the
/// partial sum.
inline double gauss_2f1(double a, double b, double c, double z) {
    if (c <= 0.0 && c == std::floor(c))
        throw domain_error("gauss_2f1: c must not be a non-positive integer");
    if (std::fabs(z) > 0.5)
        throw domain_error("gauss_2f1: only |z| <= 1/2 is supported");
    if (z == 0.0) return 1.0;
    double sum = 1.0, term = 1.0;
    for (int n = 0; n < 500; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) return sum;
    }
    throw convergence_error("gauss_2f1: series did not converge", sum, std::fabs(term));
}

/// pi_p = 2*arcsin_p(1), by the closed form 2*pi/(p*sin(pi/p)).
inline double pi_p(PParam p) {
    const double pv = p.value();
    const double pi = 3.14159265358979323846;
    return 2.0 * pi / (pv * std::sin(pi / pv));
}

/// Independent beta-integral route (2/p)*B(1 - 1/p, 1/p); agrees with pi_p to
/// ~1e-13 relative (cross-check, not used at runtime).
inline double pi_p_via_beta(PParam p) {
    const double pv = p.value();
    return (2.0 / pv) * beta(1.0 - 1.0 / pv, 1.0 / pv);
}

/// b_p = sup arctan_p = (1/(2p)) * (psi((1+p)/(2p)) - psi(1/(2p))).
inline double b_p(PParam p) {
    const double pv = p.value();
    return (digamma((1.0 + pv) / (2.0 * pv)) - digamma(1.0 / (2.0 * pv))) / (2.0 * pv);
}

/// Hypergeometric route for b_p: 2^{-1/p} F(1/p, 1/p; 1 + 1/p; 1/2).
inline double b_p_via_hypergeometric(PParam p) {
    const double ip = 1.0 / p.value();
    return std::pow(2.0, -ip) * gauss_2f1(ip, ip, 1.0 + ip, 0.5);
}

/// c_p = sup arcsinh_p on (0,1) = (1/2)^{1/p} F(1, 1/p; 1 + 1/p; 1/2).
inline double c_p(PParam p) {
    const double ip = 1.0 / p.value();
    return std::pow(0.5, ip) * gauss_2f1(1.0, ip, 1.0 + ip, 0.5);
}

}  // namespace pfun
