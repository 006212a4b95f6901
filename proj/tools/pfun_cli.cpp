// Command-line front end: evaluation of the generalized trigonometric and
// hyperbolic family, their constants and roots, theorem-suite verification,
// and table emission for external plotting.
//
// Exit codes: 0 success / all claims hold, 1 a claim is violated,
// 2 usage or domain error, 3 a claim was inconclusive.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "pfun/pfun.hpp"

namespace {

using nlohmann::json;

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

struct FnEntry {
    const char* name;
    bool forward;
    pfun::FunctionKind fkind;
    pfun::InverseKind ikind;
};

const FnEntry kFunctions[] = {
    {"sin_p", true, pfun::FunctionKind::SinP, {}},
    {"cos_p", true, pfun::FunctionKind::CosP, {}},
    {"tan_p", true, pfun::FunctionKind::TanP, {}},
    {"sinh_p", true, pfun::FunctionKind::SinhP, {}},
    {"cosh_p", true, pfun::FunctionKind::CoshP, {}},
    {"tanh_p", true, pfun::FunctionKind::TanhP, {}},
    {"arcsin_p", false, {}, pfun::InverseKind::ArcsinP},
    {"arccos_p", false, {}, pfun::InverseKind::ArccosP},
    {"arctan_p", false, {}, pfun::InverseKind::ArctanP},
    {"arcsinh_p", false, {}, pfun::InverseKind::ArcsinhP},
    {"arctanh_p", false, {}, pfun::InverseKind::ArctanhP},
};

const FnEntry* find_function(const std::string& name) {
    for (const FnEntry& e : kFunctions)
        if (name == e.name) return &e;
    return nullptr;
}

// Legal argument interval of a function. hi_open marks a singular right end;
// hi = inf means unbounded.
struct Legal {
    double lo = 0.0;
    double hi = 0.0;
    bool hi_open = false;
};

Legal legal_interval(const FnEntry& fn, pfun::PParam p) {
    const double inf = std::numeric_limits<double>::infinity();
    if (fn.forward) {
        switch (fn.fkind) {
            case pfun::FunctionKind::SinP:
            case pfun::FunctionKind::CosP: return {0.0, 0.5 * pfun::pi_p(p), false};
            case pfun::FunctionKind::TanP: return {0.0, 0.5 * pfun::pi_p(p), true};
            case pfun::FunctionKind::SinhP:
            case pfun::FunctionKind::CoshP: return {0.0, pfun::hyperbolic_cap, false};
            case pfun::FunctionKind::TanhP: return {0.0, inf, false};
        }
    }
    switch (fn.ikind) {
        case pfun::InverseKind::ArcsinP:
        case pfun::InverseKind::ArccosP:
        case pfun::InverseKind::ArctanP: return {0.0, 1.0, false};
        case pfun::InverseKind::ArcsinhP: return {0.0, inf, false};
        case pfun::InverseKind::ArctanhP: return {0.0, 1.0, true};
    }
    return {};
}

std::string legal_text(const Legal& legal) {
    std::string s = "[" + fmt15(legal.lo) + ", ";
    if (std::isinf(legal.hi)) return s + "inf)";
    return s + fmt15(legal.hi) + (legal.hi_open ? ")" : "]");
}

bool inside(const Legal& legal, double x) {
    if (!(x >= legal.lo)) return false;
    return legal.hi_open ? x < legal.hi : x <= legal.hi;
}

int usage_error(const std::string& msg) {
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    return 2;
}

double eval_function(const FnEntry& fn, pfun::PParam p, double x) {
    return fn.forward ? pfun::forward_eval(fn.fkind, p, x)
                      : pfun::inverse_eval(fn.ikind, p, x);
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const std::string& fn_name, double p_raw, double x,
             const std::string& format) {
    const FnEntry* fn = find_function(fn_name);
    if (!fn) return usage_error("unknown function: " + fn_name);
    if (!(p_raw > 1.0)) return usage_error("p must be > 1");
    const pfun::PParam p(p_raw);
    const Legal legal = legal_interval(*fn, p);
    if (!inside(legal, x)) return usage_error("x must lie in " + legal_text(legal));
    const double value = eval_function(*fn, p, x);
    if (format == "json") {
        json out = {{"function", fn_name}, {"p", p_raw}, {"x", x}, {"value", value}};
        std::printf("%s\n", out.dump().c_str());
    } else if (format == "csv") {
        std::printf("function,p,x,value\n%s,%s,%s,%s\n", fn_name.c_str(),
                    fmt15(p_raw).c_str(), fmt15(x).c_str(), fmt15(value).c_str());
    } else {
        std::printf("%s\n", fmt15(value).c_str());
    }
    return 0;
}

// --------------------------------------------------------------- const ----

int cmd_const(const std::string& name, double p_raw, const std::string& format) {
    if (!(p_raw > 1.0)) return usage_error("p must be > 1");
    const pfun::PParam p(p_raw);
    double value = 0.0;
    std::optional<pfun::RootResult> root;
    if (name == "pi_p")
        value = pfun::pi_p(p);
    else if (name == "b_p")
        value = pfun::b_p(p);
    else if (name == "c_p")
        value = pfun::c_p(p);
    else if (name == "s_p")
        root = pfun::solve_s_p(p);
    else if (name == "r_p")
        root = pfun::solve_r_p(p);
    else
        return usage_error("unknown constant: " + name +
                           " (expected pi_p, b_p, c_p, s_p or r_p)");
    if (root) value = root->root;

    if (format == "json") {
        json out = {{"name", name}, {"p", p_raw}, {"value", value}};
        if (root) {
            out["residual"] = root->residual;
            out["iterations"] = root->iterations;
        }
        std::printf("%s\n", out.dump().c_str());
    } else if (format == "csv") {
        std::printf("name,p,value,residual\n%s,%s,%s,%s\n", name.c_str(),
                    fmt15(p_raw).c_str(), fmt15(value).c_str(),
                    root ? fmt15(root->residual).c_str() : "");
    } else {
        std::printf("%s\n", fmt15(value).c_str());
        if (root) std::printf("residual %s\n", fmt15(root->residual).c_str());
    }
    return 0;
}

// --------------------------------------------------------------- check ----

std::optional<double> margin_tol_from_env() {
    const char* env = std::getenv("PFUN_TOL");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) return std::nullopt;
    return v;
}

int cmd_check(const std::string& claim_arg, std::vector<double> p_list, int n,
              const std::string& format) {
    if (p_list.empty()) p_list = {2.0};
    for (double p : p_list)
        if (!(p > 1.0)) return usage_error("p must be > 1");
    if (n < 2) return usage_error("n must be >= 2");

    double margin_tol = 1e-9;
    if (std::getenv("PFUN_TOL")) {
        const auto tol = margin_tol_from_env();
        if (!tol) return usage_error("PFUN_TOL must be a positive real");
        margin_tol = *tol;
    }

    std::vector<const pfun::ClaimInfo*> claims;
    if (claim_arg == "all") {
        for (const pfun::ClaimInfo& c : pfun::claim_catalog()) claims.push_back(&c);
    } else {
        try {
            claims.push_back(&pfun::find_claim(claim_arg));
        } catch (const pfun::domain_error& e) {
            return usage_error(e.what());
        }
    }
    std::sort(p_list.begin(), p_list.end());

    const pfun::GridSpec window{
        pfun::Interval(1e-12, pfun::hyperbolic_cap), n, margin_tol};

    struct Record {
        const pfun::ClaimInfo* claim;
        double p;
        bool skipped;
        pfun::ConvexityReport report;
    };
    std::vector<Record> records;
    std::vector<pfun::ConvexityReport> reports;
    for (const pfun::ClaimInfo* claim : claims)
        for (double p : p_list) {
            Record rec{claim, p, p < claim->min_p, {}};
            if (!rec.skipped) {
                rec.report = pfun::check_claim(*claim, pfun::PParam(p), window);
                reports.push_back(rec.report);
            }
            records.push_back(std::move(rec));
        }

    if (format == "json") {
        json arr = json::array();
        for (const Record& rec : records) {
            if (rec.skipped) {
                arr.push_back({{"claim", rec.claim->id},
                               {"p", rec.p},
                               {"verdict", "Skipped"},
                               {"reason", "p out of stated range"}});
                continue;
            }
            const auto& r = rec.report;
            arr.push_back({{"claim", r.claim_id},
                           {"p", r.p},
                           {"verdict", pfun::to_string(r.verdict)},
                           {"worst_margin", r.worst_margin},
                           {"worst_point", {r.worst_point.first, r.worst_point.second}},
                           {"pairs_checked", r.pairs_checked}});
        }
        std::printf("%s\n", arr.dump().c_str());
    } else if (format == "csv") {
        std::printf("claim,p,verdict,worst_margin,worst_x,worst_y,pairs_checked\n");
        for (const Record& rec : records) {
            if (rec.skipped) {
                std::printf("%s,%s,Skipped,,,,\n", rec.claim->id, fmt15(rec.p).c_str());
                continue;
            }
            const auto& r = rec.report;
            std::printf("%s,%s,%s,%s,%s,%s,%ld\n", r.claim_id.c_str(), fmt15(r.p).c_str(),
                        pfun::to_string(r.verdict), fmt15(r.worst_margin).c_str(),
                        fmt15(r.worst_point.first).c_str(),
                        fmt15(r.worst_point.second).c_str(), r.pairs_checked);
        }
    } else {
        for (const Record& rec : records) {
            if (rec.skipped) {
                std::printf("%-9s p=%-4s skipped (p out of stated range)\n", rec.claim->id,
                            fmt15(rec.p).c_str());
                continue;
            }
            const auto& r = rec.report;
            std::printf("%-9s p=%-4s %-12s worst_margin=%s at (%s, %s) pairs=%ld%s%s\n",
                        r.claim_id.c_str(), fmt15(r.p).c_str(), pfun::to_string(r.verdict),
                        fmt15(r.worst_margin).c_str(), fmt15(r.worst_point.first).c_str(),
                        fmt15(r.worst_point.second).c_str(), r.pairs_checked,
                        r.note.empty() ? "" : " note=", r.note.c_str());
        }
    }
    return pfun::check_exit_code(reports);
}

// --------------------------------------------------------------- roots ----

int cmd_roots(double p_raw, const std::string& name, const std::string& format) {
    if (!(p_raw > 1.0)) return usage_error("p must be > 1");
    const pfun::PParam p(p_raw);
    std::vector<std::pair<std::string, pfun::RootResult>> roots;
    if (name == "s_p" || name == "all") roots.emplace_back("s_p", pfun::solve_s_p(p));
    if (name == "r_p" || name == "all") roots.emplace_back("r_p", pfun::solve_r_p(p));
    if (roots.empty()) return usage_error("unknown root name: " + name);

    if (format == "json") {
        json arr = json::array();
        for (const auto& [nm, r] : roots)
            arr.push_back({{"name", nm},
                           {"p", p_raw},
                           {"root", r.root},
                           {"residual", r.residual},
                           {"iterations", r.iterations}});
        std::printf("%s\n", arr.dump().c_str());
    } else if (format == "csv") {
        std::printf("name,p,root,residual,iterations\n");
        for (const auto& [nm, r] : roots)
            std::printf("%s,%s,%s,%s,%d\n", nm.c_str(), fmt15(p_raw).c_str(),
                        fmt15(r.root).c_str(), fmt15(r.residual).c_str(), r.iterations);
    } else {
        for (const auto& [nm, r] : roots)
            std::printf("%s %s residual=%s iterations=%d\n", nm.c_str(),
                        fmt15(r.root).c_str(), fmt15(r.residual).c_str(), r.iterations);
    }
    return 0;
}

// --------------------------------------------------------------- table ----

int cmd_table(const std::string& fn_name, double p_raw, const std::string& domain_arg,
              int n, const std::string& format) {
    const FnEntry* fn = find_function(fn_name);
    if (!fn) return usage_error("unknown function: " + fn_name);
    if (!(p_raw > 1.0)) return usage_error("p must be > 1");
    if (n < 2) return usage_error("n must be >= 2");
    if (format != "csv" && format != "json")
        return usage_error("table supports csv or json output");

    const auto sep = domain_arg.find("..");
    if (sep == std::string::npos)
        return usage_error("domain must have the form lo..hi");
    char* end = nullptr;
    const std::string lo_s = domain_arg.substr(0, sep), hi_s = domain_arg.substr(sep + 2);
    const double lo = std::strtod(lo_s.c_str(), &end);
    if (end == lo_s.c_str() || *end) return usage_error("domain must have the form lo..hi");
    const double hi = std::strtod(hi_s.c_str(), &end);
    if (end == hi_s.c_str() || *end) return usage_error("domain must have the form lo..hi");
    if (!(lo < hi)) return usage_error("domain must have lo < hi");

    const pfun::PParam p(p_raw);
    const Legal legal = legal_interval(*fn, p);
    if (!inside(legal, lo) || !inside(legal, hi))
        return usage_error("domain must lie within " + legal_text(legal));

    std::vector<std::pair<double, double>> rows;
    rows.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double x = lo + (hi - lo) * k / (n - 1);
        rows.emplace_back(x, eval_function(*fn, p, x));
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& [x, v] : rows) arr.push_back({{"x", x}, {"value", v}});
        std::printf("%s\n", arr.dump().c_str());
    } else {
        std::printf("x,value\n");
        for (const auto& [x, v] : rows)
            std::printf("%s,%s\n", fmt15(x).c_str(), fmt15(v).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized trigonometric/hyperbolic function toolkit"};
    app.require_subcommand(1);

    std::string fn_name, const_name, claim = "all", root_name = "all", domain_arg;
    std::string format = "human";
    double p_raw = 2.0, x = 0.0;
    std::vector<double> p_list;
    int n = 40;

    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    eval->add_option("--fn", fn_name, "function name")->required();
    eval->add_option("--p", p_raw, "family parameter p > 1")->required();
    eval->add_option("--x", x, "argument")->required();
    eval->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    auto* cst = app.add_subcommand("const", "print a constant of the family");
    cst->add_option("--name", const_name, "pi_p, b_p, c_p, s_p or r_p")->required();
    cst->add_option("--p", p_raw, "family parameter p > 1")->required();
    cst->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    auto* chk = app.add_subcommand("check", "verify convexity claims on a grid");
    chk->add_option("--claim", claim, "claim id or 'all'");
    chk->add_option("--p", p_list, "family parameter(s), repeatable");
    chk->add_option("--n", n, "grid size per axis");
    chk->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    auto* rts = app.add_subcommand("roots", "solve the s_p / r_p root equations");
    rts->add_option("--p", p_raw, "family parameter p > 1")->required();
    rts->add_option("--name", root_name, "s_p, r_p or all");
    rts->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

    auto* tbl = app.add_subcommand("table", "emit (x, f(x)) rows for plotting");
    tbl->add_option("--fn", fn_name, "function name")->required();
    tbl->add_option("--p", p_raw, "family parameter p > 1")->required();
    tbl->add_option("--domain", domain_arg, "evaluation range lo..hi")->required();
    tbl->add_option("--n", n, "row count")->required();
    tbl->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    bool table_format_given = false;
    tbl->callback([&] { table_format_given = tbl->count("--format") > 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(fn_name, p_raw, x, format);
        if (cst->parsed()) return cmd_const(const_name, p_raw, format);
        if (chk->parsed()) return cmd_check(claim, p_list, n, format);
        if (rts->parsed()) return cmd_roots(p_raw, root_name, format);
        if (tbl->parsed())
            return cmd_table(fn_name, p_raw, domain_arg, n,
                             table_format_given ? format : "csv");
    } catch (const pfun::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
