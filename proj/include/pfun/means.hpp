#pragma once

// Bivariate means of two positive reals: arithmetic, geometric, logarithmic,
// harmonic, and the power mean of order t. Equal arguments are handled by the
// continuity extension (L(x,x) = x, M_0 = G).

#include <cmath>

#include "pfun/numerics.hpp"

namespace pfun {

struct MeanKind {
    enum class Tag { Arithmetic, Geometric, Logarithmic, Harmonic, Power };

    Tag tag = Tag::Arithmetic;
    double order = 0.0;  // only meaningful for Power

    static MeanKind arithmetic() { return {Tag::Arithmetic, 0.0}; }
    static MeanKind geometric() { return {Tag::Geometric, 0.0}; }
    static MeanKind logarithmic() { return {Tag::Logarithmic, 0.0}; }
    static MeanKind harmonic() { return {Tag::Harmonic, 0.0}; }
    static MeanKind power(double t) { return {Tag::Power, t}; }
};

namespace detail {

// Logarithmic mean of hi >= lo > 0. Near the diagonal the quotient
// (x-y)/(log x - log y) cancels catastrophically, so below a relative gap of
// 1e-8 we switch to the series L = A*(1 - d^2/12 - ...) in d = (x-y)/A.
// Away from it, log x - log y is evaluated as 2*atanh((x-y)/(x+y)), which
// stays fully accurate for close arguments.
inline double log_mean(double hi, double lo) {
    if (hi == lo) return hi;
    const double avg = 0.5 * (hi + lo);
    const double del = 0.5 * (hi - lo) / avg;  // = d/2 with d = (x-y)/A
    if (hi - lo < 1e-8 * hi) {
        const double d2 = del * del;
        return avg * (1.0 - d2 / 3.0 - d2 * d2 * (4.0 / 45.0));
    }
    return (hi - lo) / (2.0 * std::atanh(del));
}

}  // namespace detail

/// Evaluates the selected mean of x, y > 0. Arguments are ordered canonically
/// first, so the result is bit-exact symmetric; equal arguments return x for
/// every kind.
inline double evaluate_mean(MeanKind kind, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
        throw domain_error("evaluate_mean: arguments must be positive finite reals");
    if (x == y) return x;  // continuity extension, exact for every kind
    const double hi = x < y ? y : x;
    const double lo = x < y ? x : y;
    switch (kind.tag) {
        case MeanKind::Tag::Arithmetic:
            return 0.5 * (hi + lo);
        case MeanKind::Tag::Geometric:
            return std::sqrt(hi) * std::sqrt(lo);
        case MeanKind::Tag::Logarithmic:
            return detail::log_mean(hi, lo);
        case MeanKind::Tag::Harmonic:
            return 2.0 * hi * lo / (hi + lo);
        case MeanKind::Tag::Power: {
            const double t = kind.order;
            if (std::fabs(t) < 1e-10 || hi == lo) return std::sqrt(hi) * std::sqrt(lo);
            // factor out the dominant argument so large |t| cannot overflow
            const double base = t > 0.0 ? hi : lo;
            const double r = std::pow(t > 0.0 ? lo / hi : hi / lo, t);
            return base * std::pow(0.5 * (1.0 + r), 1.0 / t);
        }
    }
    throw domain_error("evaluate_mean: unknown mean kind");
}

}  // namespace pfun
