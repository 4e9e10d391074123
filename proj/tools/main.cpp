#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "sqdyn/bounds.hpp"
#include "sqdyn/chebyshev.hpp"
#include "sqdyn/classify.hpp"
#include "sqdyn/dynamics.hpp"
#include "sqdyn/report.hpp"
#include "sqdyn/scan.hpp"

using namespace sqdyn;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SQDYN_DEGREE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, std::string("SQDYN_DEGREE_BUDGET is not an integer: ") + env);
        }
    }
    return fpoly::kDefaultDegreeBudget;
}

ff::Element parse_element(const ff::FieldPtr& F, const std::string& text) {
    std::int64_t v = 0;
    try {
        std::size_t pos = 0;
        v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad field element '" + text + "'");
    }
    if (v < 0) return ff::element(F, v);
    if (static_cast<std::uint64_t>(v) >= F->q())
        throw Error(ErrorKind::Parse, "element " + text + " out of range for " + F->to_string());
    return ff::Element(F, static_cast<ff::Code>(v));
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
    std::string field;
    std::string poly;
    unsigned depth = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
};

int cmd_classify(const Common& c) {
    const auto F = ff::Field::parse(c.field);
    const auto f = fpoly::Poly::parse(F, c.poly);
    ordered_json j;
    j["field"] = F->to_string();
    j["f"] = f.to_string();
    const auto rep = classify::classify_2_ordinary(f);
    j["report"] = report::to_json(rep);
    if (c.depth) {
        const auto o = classify::oracle_2_ordinary(f, c.depth, c.seed, c.budget);
        j["oracle"] = report::to_json(o);
        j["agree"] = (o.status == classify::OracleStatus::CertifiedNot) == !rep.two_ordinary;
    }
    print(j);
    return kOk;
}

int cmd_scan(const scan::ScanConfig& cfg, const std::string& out) {
    const auto result = scan::run_scan(cfg);
    scan::write_scan(result, out);
    print(result.summary);
    return result.internal_failure ? kCheckFailed : kOk;
}

int cmd_gen_family(const Common& c, const std::string& family, unsigned d, const std::string& A,
                   const std::string& B, const std::string& sign) {
    const auto F = ff::Field::parse(c.field);
    if (family != "d" && family != "e") throw Error(ErrorKind::Parse, "family must be d or e");
    if (sign != "+" && sign != "-") throw Error(ErrorKind::Parse, "sign must be + or -");
    const classify::FamilyParams params{family == "d" ? classify::Family::D : classify::Family::E,
                                        parse_element(F, A), parse_element(F, B), sign == "+" ? 1 : -1};
    const auto f = classify::generate_family(params, d);
    const auto rep = classify::classify_2_ordinary(f);
    const auto want = family == "d" ? classify::Form::D : classify::Form::E;
    bool matched = false;
    for (const auto& m : rep.forms) matched |= m.form == want;

    ordered_json j;
    j["field"] = F->to_string();
    j["family"] = family;
    j["degree"] = d;
    j["A"] = params.A.code();
    j["B"] = params.B.code();
    j["sign"] = sign;
    j["poly"] = f.to_string();
    j["core"] = classify::family_core(params, d).to_string();
    j["classification"] = report::to_json(rep);
    j["generating_form_matched"] = matched;
    if (F->p() >= d) {
        ordered_json conj;
        const auto T = classify::chebyshev(d);
        for (int s : {+1, -1}) {
            const auto target = classify::reduce(s > 0 ? T : classify::IntPoly() - T, F);
            const auto w = classify::are_conjugate(f, target);
            conj[s > 0 ? "plus_T" : "minus_T"] =
                w ? ordered_json{{"a", w->first.code()}, {"b", w->second.code()}} : ordered_json(nullptr);
        }
        j["chebyshev_conjugacy"] = conj;
    }
    print(j);
    return matched ? kOk : kCheckFailed;
}

int cmd_verify_weil(const Common& c) {
    const auto F = ff::Field::parse(c.field);
    const auto f = fpoly::Poly::parse(F, c.poly);
    const auto w = bounds::weil_check(f);
    print({{"field", F->to_string()}, {"f", f.to_string()}, {"weil", report::to_json(w)}});
    return w.pass() ? kOk : kCheckFailed;
}

int cmd_verify_bounds(const Common& c, const std::optional<std::string>& point, unsigned L_opt) {
    const auto F = ff::Field::parse(c.field);
    const auto f = fpoly::Poly::parse(F, c.poly);
    if (f.degree() < 2) throw Error(ErrorKind::DegreeTooSmall, "degree must be at least 2");
    const bool two = classify::classify_2_ordinary(f).two_ordinary;
    std::vector<unsigned> Ls;
    if (L_opt) Ls = {L_opt};
    else
        for (unsigned L = 1; L <= std::max(bounds::choose_L(F->q(), static_cast<unsigned>(f.degree())), 3u); ++L)
            Ls.push_back(L);
    std::vector<ff::Element> points;
    if (point) points.push_back(parse_element(F, *point));
    else points = ff::enumerate_elements(F);

    bool ok = true;
    ordered_json rows = ordered_json::array();
    for (const auto& a : points) {
        ordered_json r;
        r["a"] = a.code();
        const auto signs = dynamics::sign_sequence(f, a);
        ordered_json ob = ordered_json::array();
        if (signs.purely_periodic) {
            for (unsigned L : Ls) {
                const auto b = bounds::orbit_bound_check(f, a, L);
                ordered_json bj = report::to_json(b);
                ok &= b.pass_sum() && b.pass_uniform();
                if (two) {
                    ordered_json env = ordered_json::array();
                    for (const auto& Bi : b.B_values) {
                        const auto e = bounds::envelope_holds(Bi, F->q(), f.degree());
                        ok &= e.pass();
                        env.push_back(report::to_json(e));
                    }
                    bj["envelope"] = env;
                }
                ob.push_back(bj);
            }
            r["orbit_bound"] = ob;
        } else {
            r["orbit_bound"] = "skipped: NotPurelyPeriodic";
        }
        if (two) {
            ordered_json rb = ordered_json::array();
            for (int s : {+1, -1}) {
                const auto rr = bounds::run_bound_check(f, a, s);
                ok &= rr.pass();
                rb.push_back(report::to_json(rr));
            }
            r["run_bound"] = rb;
        } else {
            r["run_bound"] = "skipped: exceptional form";
        }
        rows.push_back(r);
    }
    print({{"field", F->to_string()}, {"f", f.to_string()}, {"two_ordinary", two}, {"points", rows}});
    return ok ? kOk : kCheckFailed;
}

int cmd_orbit(const Common& c, const std::string& point) {
    const auto F = ff::Field::parse(c.field);
    const auto f = fpoly::Poly::parse(F, c.poly);
    const auto a = parse_element(F, point);
    const auto o = dynamics::forward_orbit(f, a);
    const auto s = dynamics::sign_sequence(o);
    print({{"field", F->to_string()},
           {"f", f.to_string()},
           {"orbit", report::to_json(o)},
           {"signs", report::to_json(s)},
           {"longest_square_run", report::to_json(dynamics::longest_run(s, +1))},
           {"longest_nonsquare_run", report::to_json(dynamics::longest_run(s, -1))}});
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial dynamics over finite fields: classification, scans and bound checks"};
    app.require_subcommand(1);

    Common c;
    scan::ScanConfig cfg;
    std::string out = "scan_out", space = "monic", checks = "classification";
    std::string family, A, B, sign = "+";
    std::optional<std::string> point;
    unsigned degree = 0, L = 0;
    c.budget = 0;

    auto add_field = [&](CLI::App* s) { s->add_option("--field", c.field, "p, p^k or p^k/(c0,...,1)")->required(); };
    auto add_poly = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--poly", c.poly, "coefficients, constant first");
        if (required) o->required();
    };
    auto add_budget = [&](CLI::App* s) { s->add_option("--budget", c.budget, "degree budget for iterates"); };

    auto* classify_cmd = app.add_subcommand("classify", "classify one polynomial");
    add_field(classify_cmd);
    add_poly(classify_cmd, true);
    classify_cmd->add_option("--depth", c.depth, "also run the factorization oracle to this depth");
    classify_cmd->add_option("--seed", c.seed);
    add_budget(classify_cmd);

    auto add_scan_opts = [&](CLI::App* s) {
        s->add_option("--degree", degree)->required();
        s->add_option("--space", space, "all or monic");
        s->add_option("--sample", cfg.sample, "sample size (0 = exhaustive)");
        s->add_option("--seed", cfg.seed);
        s->add_option("--depth", cfg.depth, "oracle depth (0 = off)");
        s->add_option("--L", cfg.L, "window length (0 = sweep)");
        s->add_option("--workers", cfg.workers);
        s->add_option("--out", out, "output directory");
        add_budget(s);
    };
    auto* scan_cmd = app.add_subcommand("scan", "scan a coefficient space");
    add_field(scan_cmd);
    add_scan_opts(scan_cmd);
    scan_cmd->add_option("--checks", checks, "comma list: classification,weil,orbit-bounds,run-bounds,ratios,all");

    auto* gen_cmd = app.add_subcommand("gen-family", "generate a family (d) or (e) member");
    add_field(gen_cmd);
    gen_cmd->add_option("--family", family, "d or e")->required();
    gen_cmd->add_option("--degree", degree)->required();
    gen_cmd->add_option("--A", A)->required();
    gen_cmd->add_option("--B", B)->required();
    gen_cmd->add_option("--sign", sign, "+ or -");

    auto* weil_cmd = app.add_subcommand("verify-weil", "Weil bound for one polynomial or a scan");
    add_field(weil_cmd);
    add_poly(weil_cmd, false);
    weil_cmd->add_option("--degree", degree);
    weil_cmd->add_option("--space", space);
    weil_cmd->add_option("--sample", cfg.sample);
    weil_cmd->add_option("--seed", cfg.seed);
    weil_cmd->add_option("--workers", cfg.workers);
    weil_cmd->add_option("--out", out);
    add_budget(weil_cmd);

    auto* bounds_cmd = app.add_subcommand("verify-bounds", "orbit, envelope and run inequalities");
    add_field(bounds_cmd);
    add_poly(bounds_cmd, false);
    bounds_cmd->add_option("--point", point, "starting point (default: every element)");
    bounds_cmd->add_option("--L", L, "window length (0 = sweep)");
    bounds_cmd->add_option("--degree", degree);
    bounds_cmd->add_option("--space", space);
    bounds_cmd->add_option("--sample", cfg.sample);
    bounds_cmd->add_option("--seed", cfg.seed);
    bounds_cmd->add_option("--workers", cfg.workers);
    bounds_cmd->add_option("--out", out);
    add_budget(bounds_cmd);

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit, sign sequence and runs of one point");
    add_field(orbit_cmd);
    add_poly(orbit_cmd, true);
    orbit_cmd->add_option("--point", point)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (!c.budget) c.budget = default_budget();
        cfg.budget = c.budget;
        auto scan_mode = [&](scan::Checks ch) {
            cfg.field = c.field;
            cfg.degree = degree;
            cfg.space = scan::parse_space(space);
            cfg.checks = ch;
            if (L) cfg.L = L;
            return cmd_scan(cfg, out);
        };
        if (*classify_cmd) return cmd_classify(c);
        if (*scan_cmd) return scan_mode(scan::parse_checks(checks));
        if (*gen_cmd) return cmd_gen_family(c, family, degree, A, B, sign);
        if (*weil_cmd) {
            if (!c.poly.empty()) return cmd_verify_weil(c);
            if (!degree) throw Error(ErrorKind::Parse, "verify-weil needs --poly or --degree");
            return scan_mode({false, true, false, false});
        }
        if (*bounds_cmd) {
            if (!c.poly.empty()) return cmd_verify_bounds(c, point, L);
            if (!degree) throw Error(ErrorKind::Parse, "verify-bounds needs --poly or --degree");
            return scan_mode({false, false, true, true});
        }
        if (*orbit_cmd) return cmd_orbit(c, *point);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
