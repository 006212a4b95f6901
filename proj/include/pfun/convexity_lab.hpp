#pragma once

// Numerical verification machinery for the logarithmic-mean convexity
// claims: MN-convexity grid checks with counterexample reporting, monotone
// profile diagnostics, Chebyshev/Jensen integral checkers, and the s_p / r_p
// root solvers that bound the tan_p / arctanh_p claim domains.
//
// A claim "f is MN-convex" means f(M(x,y)) <= N(f(x),f(y)); the margin of a
// pair is N(f(x),f(y)) - f(M(x,y)) (negated for concavity), so a healthy
// claim has non-negative margins everywhere on the grid.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfun/forward_pfunctions.hpp"
#include "pfun/inverse_pfunctions.hpp"
#include "pfun/means.hpp"
#include "pfun/numerics.hpp"
#include "pfun/special_constants.hpp"

namespace pfun {

struct GridSpec {
    Interval domain;
    int n = 40;
    double margin_tol = 1e-9;

    /// n points strictly interior to domain, offset half a cell from each end.
    std::vector<double> points() const {
        if (n < 2) throw domain_error("GridSpec: n must be >= 2");
        std::vector<double> pts;
        pts.reserve(n);
        const double cell = (domain.hi - domain.lo) / n;
        for (int k = 0; k < n; ++k) pts.push_back(domain.lo + (k + 0.5) * cell);
        return pts;
    }
};

enum class Verdict { Holds, Violated, Inconclusive };
enum class Direction { ConvexLE, ConcaveGE };

struct ConvexityReport {
    std::string claim_id;
    double p = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    double worst_margin = 0.0;
    std::pair<double, double> worst_point{0.0, 0.0};
    long pairs_checked = 0;
    std::string note;  // failure reason on Inconclusive, or claim metadata
};

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Violated: return "Violated";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Grid check of f(M(x,y)) <= N(f(x),f(y)) (ConvexLE) or >= (ConcaveGE) over
/// all pairs of grid points. f_precise is consulted before declaring a
/// violation: a margin below -margin_tol must persist when the three function
/// evaluations are redone at tightened tolerance, which guards against
/// quadrature noise manufacturing counterexamples.
template <class F, class FP>
ConvexityReport mn_convexity_check(F&& f, FP&& f_precise, MeanKind inner, MeanKind outer,
                                   const GridSpec& grid, Direction direction,
                                   std::string claim_id = "", double p_label = 0.0) {
    const std::vector<double> pts = grid.points();
    const int n = static_cast<int>(pts.size());

    ConvexityReport rep;
    rep.claim_id = std::move(claim_id);
    rep.p = p_label;
    rep.pairs_checked = static_cast<long>(n) * n;

    auto margin_with = [&](auto& fn, double x, double y) {
        const double fm = fn(evaluate_mean(inner, x, y));
        const double nv = evaluate_mean(outer, fn(x), fn(y));
        return direction == Direction::ConvexLE ? nv - fm : fm - nv;
    };

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
        try {
            vals[i] = f(pts[i]);
        } catch (const std::exception& e) {
            rep.verdict = Verdict::Inconclusive;
            rep.worst_point = {pts[i], pts[i]};
            rep.note = std::string("evaluation failed: ") + e.what();
            return rep;
        }
    }

    double worst = std::numeric_limits<double>::infinity();
    std::pair<double, double> worst_at{pts[0], pts[0]};
    std::vector<std::pair<int, int>> suspects;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double m;
            try {
                const double fm = f(evaluate_mean(inner, pts[i], pts[j]));
                const double nv = evaluate_mean(outer, vals[i], vals[j]);
                m = direction == Direction::ConvexLE ? nv - fm : fm - nv;
            } catch (const std::exception& e) {
                rep.verdict = Verdict::Inconclusive;
                rep.worst_point = {pts[i], pts[j]};
                rep.note = std::string("evaluation failed: ") + e.what();
                return rep;
            }
            if (m < worst) {
                worst = m;
                worst_at = {pts[i], pts[j]};
            }
            if (m < -grid.margin_tol) suspects.emplace_back(i, j);
        }
    }

    if (!suspects.empty()) {
        // re-examine suspected violations at tightened tolerance
        double refined_worst = std::numeric_limits<double>::infinity();
        std::pair<double, double> refined_at = worst_at;
        for (auto [i, j] : suspects) {
            const double m = margin_with(f_precise, pts[i], pts[j]);
            if (m < refined_worst) {
                refined_worst = m;
                refined_at = {pts[i], pts[j]};
            }
        }
        if (refined_worst < -grid.margin_tol) {
            rep.verdict = Verdict::Violated;
            rep.worst_margin = refined_worst;
            rep.worst_point = refined_at;
            return rep;
        }
        worst = std::min(worst, refined_worst);
    }

    rep.verdict = Verdict::Holds;
    rep.worst_margin = worst;
    rep.worst_point = worst_at;
    return rep;
}

/// Single-tolerance convenience overload.
template <class F>
ConvexityReport mn_convexity_check(F&& f, MeanKind inner, MeanKind outer, const GridSpec& grid,
                                   Direction direction, std::string claim_id = "",
                                   double p_label = 0.0) {
    return mn_convexity_check(f, f, inner, outer, grid, direction, std::move(claim_id), p_label);
}

enum class ProfileTrend { Increasing, Decreasing, NonMonotone };

/// Evaluates the generalized-convexity profile g(x) = x^{1-a} f'(x)/f(x)^{1-b}
/// on the grid and classifies its trend by consecutive differences.
/// (a,b) = (-1,-1) gives the HH profile x^2 f'/f^2; (1,0) gives f'/f.
/// Ties within margin_tol count as both, and Increasing wins.
template <class F, class DF>
ProfileTrend monotone_profile(F&& f, DF&& f_prime, double a, double b, const GridSpec& grid) {
    const std::vector<double> pts = grid.points();
    std::vector<double> g;
    g.reserve(pts.size());
    for (double x : pts) {
        const double fx = f(x);
        if (!(fx > 0.0)) throw domain_error("monotone_profile: f must be positive on the grid");
        const double v = std::pow(x, 1.0 - a) * f_prime(x) / std::pow(fx, 1.0 - b);
        if (!std::isfinite(v)) throw domain_error("monotone_profile: profile not finite at grid point");
        g.push_back(v);
    }
    bool inc = true, dec = true;
    for (std::size_t k = 1; k < g.size(); ++k) {
        const double d = g[k] - g[k - 1];
        if (d < -grid.margin_tol) inc = false;
        if (d > grid.margin_tol) dec = false;
    }
    if (inc) return ProfileTrend::Increasing;
    if (dec) return ProfileTrend::Decreasing;
    return ProfileTrend::NonMonotone;
}

struct IntegralComparison {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;  // lhs <= rhs + tol
};

/// Chebyshev integral inequality: for f, g similarly ordered and weight w > 0,
/// (int w f)(int w g) <= (int w)(int w f g). The checker just reports both
/// sides; opposite ordering reverses the inequality.
template <class F, class G, class W>
IntegralComparison chebyshev_check(F&& f, G&& g, W&& w, const Interval& iv,
                                   const NumericConfig& cfg = {}, double tol = 1e-9) {
    const double wf = integrate([&](double x) { return w(x) * f(x); }, iv, cfg);
    const double wg = integrate([&](double x) { return w(x) * g(x); }, iv, cfg);
    const double w1 = integrate([&](double x) { return w(x); }, iv, cfg);
    const double wfg = integrate([&](double x) { return w(x) * f(x) * g(x); }, iv, cfg);
    IntegralComparison r;
    r.lhs = wf * wg;
    r.rhs = w1 * wfg;
    r.ok = r.lhs <= r.rhs + tol;
    return r;
}

/// Integral Jensen inequality for convex f:
/// f( (1/(b-a)) int phi ) <= (1/(b-a)) int f(phi); reversed when f is concave.
template <class F, class Phi>
IntegralComparison jensen_check(F&& f_convex, Phi&& phi, const Interval& iv,
                                const NumericConfig& cfg = {}, double tol = 1e-9) {
    const double width = iv.hi - iv.lo;
    const double avg = integrate([&](double x) { return phi(x); }, iv, cfg) / width;
    IntegralComparison r;
    r.lhs = f_convex(avg);
    r.rhs = integrate([&](double x) { return f_convex(phi(x)); }, iv, cfg) / width;
    r.ok = r.lhs <= r.rhs + tol;
    return r;
}

/// s_p: unique root of tan_p(x) = (p-1)^{-1/p} on (0, pi_p/2).
inline RootResult solve_s_p(PParam p, const NumericConfig& cfg = {}) {
    const double pv = p.value();
    const double target = std::pow(pv - 1.0, -1.0 / pv);
    const double top = 0.5 * pi_p(p);
    auto fn = [&](double x) { return tan_p(p, x, cfg) - target; };
    auto dfn = [&](double x) { return 1.0 + std::pow(tan_p(p, x, cfg), pv); };
    double lo = 1e-8 * top, hi = 0.5 * top;
    for (int k = 0; fn(hi) <= 0.0; ++k) {
        if (k > 50) throw bracket_error("solve_s_p: failed to bracket the root");
        lo = hi;
        hi = top - 0.5 * (top - hi);
    }
    return solve_bracketed(fn, dfn, Interval(lo, hi), cfg);
}

/// r_p: unique root of x^{p-1} arctanh_p(x) = 1/p on (0, 1).
inline RootResult solve_r_p(PParam p, const NumericConfig& cfg = {}) {
    const double pv = p.value();
    auto fn = [&](double x) { return std::pow(x, pv - 1.0) * arctanh_p(p, x, cfg) - 1.0 / pv; };
    auto dfn = [&](double x) {
        return (pv - 1.0) * std::pow(x, pv - 2.0) * arctanh_p(p, x, cfg) +
               std::pow(x, pv - 1.0) / detail::one_minus_pow(x, pv);
    };
    double lo = 1e-6, hi = 0.75;
    for (int k = 0; fn(hi) <= 0.0; ++k) {
        if (k > 50) throw bracket_error("solve_r_p: failed to bracket the root");
        lo = hi;
        hi = 1.0 - 0.5 * (1.0 - hi);
    }
    return solve_bracketed(fn, dfn, Interval(lo, hi), cfg);
}

/// One verifiable claim: f is inner/outer-convex (or concave) on domain(p),
/// for p >= min_p. `note` carries interpretive remarks that surface in the
/// report metadata.
struct ClaimInfo {
    const char* id;
    double min_p;  // claims restricted in p state an inclusive bound; 1.0 = all p > 1
    MeanKind inner;
    MeanKind outer;
    Direction direction;
    double (*f)(PParam, double, const NumericConfig&);
    Interval (*domain)(PParam, const NumericConfig&);
    const char* note = "";
};

/// The claim table, ordered lexicographically by id.
inline const std::vector<ClaimInfo>& claim_catalog() {
    static const MeanKind A = MeanKind::arithmetic();
    static const MeanKind L = MeanKind::logarithmic();
    static const std::vector<ClaimInfo> claims = {
        // L(tan_p(x),tan_p(y)) >= tan_p(L(x,y)) on (s_p, pi_p/2)
        {"cor2.5-1", 1.0, L, L, Direction::ConvexLE,
         +[](PParam p, double x, const NumericConfig& c) { return tan_p(p, x, c); },
         +[](PParam p, const NumericConfig& c) {
             return Interval(solve_s_p(p, c).root + 1e-6, 0.5 * pi_p(p) - 1e-6);
         }},
        // L(arctanh_p(x),arctanh_p(y)) >= arctanh_p(L(x,y)) on (r_p, 1)
        {"cor2.5-2", 1.0, L, L, Direction::ConvexLE,
         +[](PParam p, double x, const NumericConfig& c) { return arctanh_p(p, x, c); },
         +[](PParam p, const NumericConfig& c) {
             return Interval(solve_r_p(p, c).root + 1e-6, 1.0 - 1e-6);
         },
         "r_p defined by x^{p-1} arctanh_p(x) = 1/p, read with a single variable"},
        // L(sin_p(x),sin_p(y)) <= sin_p(L(x,y)) on (0, pi_p/2)
        {"thm1.3-1", 1.0, L, L, Direction::ConcaveGE,
         +[](PParam p, double x, const NumericConfig& c) { return sin_p(p, x, c); },
         +[](PParam p, const NumericConfig&) { return Interval(0.0, 0.5 * pi_p(p)); }},
        // L(cos_p(x),cos_p(y)) <= cos_p(L(x,y)) on (0, pi_p/2), p >= 2
        {"thm1.3-2", 2.0, L, L, Direction::ConcaveGE,
         +[](PParam p, double x, const NumericConfig& c) { return cos_p(p, x, c); },
         +[](PParam p, const NumericConfig&) { return Interval(0.0, 0.5 * pi_p(p)); }},
        // L(1/sin_p(x),1/sin_p(y)) >= 1/sin_p(A(x,y)) on (0, pi_p/2)
        {"thm1.4-1", 1.0, A, L, Direction::ConvexLE,
         +[](PParam p, double x, const NumericConfig& c) { return 1.0 / sin_p(p, x, c); },
         +[](PParam p, const NumericConfig&) { return Interval(0.0, 0.5 * pi_p(p)); }},
        // L(1/cos_p(x),1/cos_p(y)) >= 1/cos_p(L(x,y)) on (0, pi_p/2)
        {"thm1.4-2", 1.0, L, L, Direction::ConvexLE,
         +[](PParam p, double x, const NumericConfig& c) { return 1.0 / cos_p(p, x, c); },
         +[](PParam p, const NumericConfig&) { return Interval(0.0, 0.5 * pi_p(p)); }},
        // L(tanh_p(x),tanh_p(y)) <= tanh_p(A(x,y)) on (0, inf), capped
        {"thm1.4-3", 1.0, A, L, Direction::ConcaveGE,
         +[](PParam p, double x, const NumericConfig& c) { return tanh_p(p, x, c); },
         +[](PParam, const NumericConfig&) { return Interval(0.0, hyperbolic_cap); }},
        // L(arcsinh_p(x),arcsinh_p(y)) <= arcsinh_p(A(x,y)) on (0, 1)
        {"thm1.4-4", 1.0, A, L, Direction::ConcaveGE,
         +[](PParam p, double x, const NumericConfig& c) { return arcsinh_p(p, x, c); },
         +[](PParam, const NumericConfig&) { return Interval(0.0, 1.0); }},
        // L(arctan_p(x),arctan_p(y)) <= arctan_p(A(x,y)) on (0, 1)
        {"thm1.4-5", 1.0, A, L, Direction::ConcaveGE,
         +[](PParam p, double x, const NumericConfig& c) { return arctan_p(p, x, c); },
         +[](PParam, const NumericConfig&) { return Interval(0.0, 1.0); }},
    };
    return claims;
}

inline const ClaimInfo& find_claim(std::string_view id) {
    for (const ClaimInfo& c : claim_catalog())
        if (id == c.id) return c;
    throw domain_error("unknown claim id: " + std::string(id));
}

namespace detail {

inline NumericConfig tightened(NumericConfig cfg) {
    cfg.abs_tol = 1e-14;
    cfg.rel_tol = 1e-14;
    return cfg;
}

inline bool intersect(const Interval& a, const Interval& b, double& lo, double& hi) {
    lo = std::max(a.lo, b.lo);
    hi = std::min(a.hi, b.hi);
    return lo < hi;
}

}  // namespace detail

/// Runs one claim for one p on `grid.n` points. The grid's domain is
/// intersected with the claim's stated domain; pass a wide window to use the
/// claim domain as-is. `reversed` flips the claimed direction (used by
/// strictness probes, which expect Violated).
inline ConvexityReport check_claim(const ClaimInfo& claim, PParam p, const GridSpec& grid,
                                   const NumericConfig& cfg = {}, bool reversed = false) {
    ConvexityReport rep;
    rep.claim_id = claim.id;
    rep.p = p.value();
    double lo, hi;
    try {
        const Interval dom = claim.domain(p, cfg);
        if (!detail::intersect(grid.domain, dom, lo, hi)) {
            rep.note = "grid window does not intersect the claim domain";
            return rep;
        }
    } catch (const std::exception& e) {
        rep.note = std::string("domain resolution failed: ") + e.what();
        return rep;
    }
    const GridSpec eff{Interval(lo, hi), grid.n, grid.margin_tol};
    Direction dir = claim.direction;
    if (reversed)
        dir = dir == Direction::ConvexLE ? Direction::ConcaveGE : Direction::ConvexLE;
    const NumericConfig tight = detail::tightened(cfg);
    ConvexityReport report =
        mn_convexity_check([&](double x) { return claim.f(p, x, cfg); },
                           [&](double x) { return claim.f(p, x, tight); }, claim.inner,
                           claim.outer, eff, dir, claim.id, p.value());
    if (report.note.empty()) report.note = claim.note;
    return report;
}

/// Margin of one pair in the claim's stated direction (positive = satisfied).
inline double claim_margin(const ClaimInfo& claim, PParam p, double x, double y,
                           const NumericConfig& cfg = {}) {
    const double fm = claim.f(p, evaluate_mean(claim.inner, x, y), cfg);
    const double nv = evaluate_mean(claim.outer, claim.f(p, x, cfg), claim.f(p, y, cfg));
    return claim.direction == Direction::ConvexLE ? nv - fm : fm - nv;
}

/// Runs every catalogued claim for every p in p_set (claims whose stated
/// p-range excludes a given p are omitted). Reports come back sorted by
/// (claim_id, p).
inline std::vector<ConvexityReport> run_theorem_suite(const std::vector<PParam>& p_set,
                                                      const GridSpec& grid,
                                                      const NumericConfig& cfg = {}) {
    std::vector<double> ps;
    ps.reserve(p_set.size());
    for (PParam p : p_set) ps.push_back(p.value());
    std::sort(ps.begin(), ps.end());
    std::vector<ConvexityReport> out;
    for (const ClaimInfo& claim : claim_catalog())
        for (double pv : ps) {
            if (pv < claim.min_p) continue;
            out.push_back(check_claim(claim, PParam(pv), grid, cfg));
        }
    return out;
}

/// CLI exit-code contract: 0 all Holds, 1 any Violated, 3 any Inconclusive
/// (and none Violated).
inline int check_exit_code(const std::vector<ConvexityReport>& reports) {
    bool inconclusive = false;
    for (const ConvexityReport& r : reports) {
        if (r.verdict == Verdict::Violated) return 1;
        if (r.verdict == Verdict::Inconclusive) inconclusive = true;
    }
    return inconclusive ? 3 : 0;
}

}  // namespace pfun
