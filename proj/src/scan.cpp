#include "sqdyn/scan.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sqdyn/bounds.hpp"
#include "sqdyn/classify.hpp"
#include "sqdyn/dynamics.hpp"
#include "sqdyn/report.hpp"

namespace sqdyn::scan {

using nlohmann::ordered_json;

namespace {

struct Ratio {
    double value = 0;
    std::string f, a;
};

void raise(Ratio& r, double v, const std::string& f, const std::string& a) {
    if (v > r.value) r = {v, f, a};
}

struct ItemStats {
    std::map<char, std::uint64_t> forms;
    std::uint64_t two_ordinary = 0;
    std::uint64_t oracle_certified = 0, oracle_consistent = 0, oracle_disagree = 0;
    std::uint64_t weil_pass = 0, weil_fail = 0, weil_na = 0;
    std::uint64_t orbit_pass = 0, orbit_fail = 0, orbit_skipped = 0;
    std::uint64_t envelope_pass = 0, envelope_fail = 0;
    std::uint64_t run_pass = 0, run_fail = 0, run_cycle_constant = 0;
    std::uint64_t errors = 0;
    std::size_t max_run_square = 0, max_run_nonsquare = 0, max_orbit = 0;
    // Index 0: formula exponent, index 1: fixed 5/6.
    Ratio orbit_ratio[2], run_ratio[2];

    void merge(const ItemStats& o) {
        for (auto& [k, v] : o.forms) forms[k] += v;
        two_ordinary += o.two_ordinary;
        oracle_certified += o.oracle_certified;
        oracle_consistent += o.oracle_consistent;
        oracle_disagree += o.oracle_disagree;
        weil_pass += o.weil_pass;
        weil_fail += o.weil_fail;
        weil_na += o.weil_na;
        orbit_pass += o.orbit_pass;
        orbit_fail += o.orbit_fail;
        orbit_skipped += o.orbit_skipped;
        envelope_pass += o.envelope_pass;
        envelope_fail += o.envelope_fail;
        run_pass += o.run_pass;
        run_fail += o.run_fail;
        run_cycle_constant += o.run_cycle_constant;
        errors += o.errors;
        max_run_square = std::max(max_run_square, o.max_run_square);
        max_run_nonsquare = std::max(max_run_nonsquare, o.max_run_nonsquare);
        max_orbit = std::max(max_orbit, o.max_orbit);
        for (int k = 0; k < 2; ++k) {
            // Strict comparison keeps the earliest item on ties.
            if (o.orbit_ratio[k].value > orbit_ratio[k].value) orbit_ratio[k] = o.orbit_ratio[k];
            if (o.run_ratio[k].value > run_ratio[k].value) run_ratio[k] = o.run_ratio[k];
        }
    }

    bool failed() const {
        return oracle_disagree || weil_fail || orbit_fail || envelope_fail || run_fail;
    }
};

struct ItemOutput {
    std::vector<std::string> jsonl;
    std::vector<std::string> csv;
    ItemStats stats;
};

double ratio_exponent(unsigned d) {
    const double l = std::log2(static_cast<double>(d));
    return (2 * l + 1) / (2 * l + 2);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::vector<unsigned> window_lengths(const ScanConfig& cfg, std::uint64_t q) {
    if (cfg.L) return {cfg.L};
    const unsigned top = std::max(bounds::choose_L(q, cfg.degree), 3u);
    std::vector<unsigned> Ls;
    for (unsigned L = 1; L <= top; ++L) Ls.push_back(L);
    return Ls;
}

ItemOutput scan_item(const ScanConfig& cfg, const ff::FieldPtr& F, const fpoly::Poly& f) {
    ItemOutput out;
    ItemStats& st = out.stats;
    const std::string fs = f.to_string();
    const std::uint32_t q = F->q();
    auto row = [&](const char* check) {
        ordered_json j;
        j["check"] = check;
        j["f"] = fs;
        return j;
    };
    auto error_row = [&](const char* check, const Error& e) {
        ordered_json j = row(check);
        j["error"] = std::string(to_string(e.kind()));
        j["message"] = e.what();
        out.jsonl.push_back(j.dump());
        ++st.errors;
    };

    bool two_ordinary = false;
    const bool need_class =
        cfg.checks.classification || cfg.checks.orbit_bounds || cfg.checks.run_bounds || cfg.checks.ratios;
    if (need_class) {
        const auto rep = classify::classify_2_ordinary(f);
        two_ordinary = rep.two_ordinary;
        st.two_ordinary += rep.two_ordinary;
        if (cfg.checks.classification) {
            ordered_json j = row("classify");
            j["report"] = report::to_json(rep);
            for (const auto& m : rep.forms) ++st.forms[classify::form_letter(m.form)];
            if (cfg.depth) {
                try {
                    const auto o = classify::oracle_2_ordinary(f, cfg.depth, cfg.seed, cfg.budget);
                    const bool cert = o.status == classify::OracleStatus::CertifiedNot;
                    j["oracle"] = report::to_json(o);
                    j["agree"] = cert == !rep.two_ordinary;
                    (cert ? st.oracle_certified : st.oracle_consistent)++;
                    if (cert == rep.two_ordinary) ++st.oracle_disagree;
                } catch (const Error& e) {
                    j["oracle"] = {{"error", std::string(to_string(e.kind()))}};
                    ++st.errors;
                }
            }
            out.jsonl.push_back(j.dump());
        }
    }

    if (cfg.checks.weil) {
        const auto w = bounds::weil_check(f);
        ordered_json j = row("weil");
        j["result"] = report::to_json(w);
        out.jsonl.push_back(j.dump());
        if (!w.applicable) ++st.weil_na;
        else (w.pass() ? st.weil_pass : st.weil_fail)++;
    }

    const bool bound_rows = cfg.checks.orbit_bounds || cfg.checks.run_bounds;
    if (!bound_rows && !cfg.checks.ratios) return out;

    const auto Ls = window_lengths(cfg, q);
    std::vector<std::int8_t> chars;
    unsigned Lmax = Ls.back();
    if (bound_rows) {
        try {
            chars = bounds::iterate_characters(f, Lmax);
        } catch (const Error& e) {
            error_row("bounds", e);
            return out;
        }
    }
    const double ex[2] = {ratio_exponent(cfg.degree), 5.0 / 6.0};
    // Per-f maxima; merged into the item stats after the point loop.
    ItemStats own;

    for (ff::Code ac = 0; ac < q; ++ac) {
        const ff::Element a(F, ac);
        const auto orbit = dynamics::forward_orbit(f, a);
        const auto signs = dynamics::sign_sequence(orbit);
        st.max_orbit = std::max(st.max_orbit, orbit.size());
        const std::string as = a.to_string();

        // Ratios only cover polynomials outside forms (a)-(e).
        if (two_ordinary && signs.purely_periodic)
            for (int k = 0; k < 2; ++k)
                raise(own.orbit_ratio[k],
                      static_cast<double>(orbit.size()) /
                          (static_cast<double>(signs.sign_period) * std::pow(static_cast<double>(q), ex[k])),
                      fs, as);
        for (int sign : {+1, -1}) {
            const auto run = dynamics::longest_run(signs, sign);
            if (run.cycle_constant) continue;
            auto& mx = sign > 0 ? st.max_run_square : st.max_run_nonsquare;
            mx = std::max(mx, run.length);
            if (two_ordinary)
                for (int k = 0; k < 2; ++k)
                    raise(own.run_ratio[k],
                          static_cast<double>(run.length) / std::pow(static_cast<double>(q), ex[k]), fs, as);
        }

        if (cfg.checks.orbit_bounds) {
            if (!signs.purely_periodic) {
                ordered_json j = row("orbit_bound");
                j["a"] = ac;
                j["skipped"] = "NotPurelyPeriodic";
                out.jsonl.push_back(j.dump());
                ++st.orbit_skipped;
            } else {
                for (unsigned L : Ls) {
                    bounds::BoundReport b;
                    try {
                        b = bounds::orbit_bound_check(f, a, L, chars);
                    } catch (const Error& e) {
                        error_row("orbit_bound", e);
                        continue;
                    }
                    ordered_json j = row("orbit_bound");
                    j["a"] = ac;
                    j["report"] = report::to_json(b);
                    (b.pass_sum() && b.pass_uniform() ? st.orbit_pass : st.orbit_fail)++;
                    if (two_ordinary) {
                        ordered_json env = ordered_json::array();
                        for (std::size_t i = 0; i < b.B_values.size(); ++i) {
                            auto e = bounds::envelope_holds(b.B_values[i], q, f.degree());
                            ordered_json ej = report::to_json(e);
                            ej["i"] = i;
                            env.push_back(ej);
                            (e.pass() ? st.envelope_pass : st.envelope_fail)++;
                        }
                        j["envelope"] = env;
                    }
                    out.jsonl.push_back(j.dump());
                    out.csv.push_back(std::to_string(q) + "," + std::to_string(cfg.degree) + "," + csv_quote(fs) +
                                      "," + as + "," + std::to_string(b.m) + "," + std::to_string(b.orbit_size) +
                                      "," + std::to_string(L) + "," + b.max_B().to_string() + "," +
                                      std::to_string(b.orbit_size) + "," + b.sum_rhs().to_string() + "," +
                                      (b.pass_sum() ? "true" : "false"));
                }
            }
        }

        if (cfg.checks.run_bounds) {
            for (int sign : {+1, -1}) {
                const auto run = dynamics::longest_run(signs, sign);
                // Only polynomials outside forms (a)-(e) fall under the run theorem.
                if (!two_ordinary) continue;
                const auto S = run.cycle_constant || run.length == 0 ? 0u
                                                                     : static_cast<unsigned>((run.length - 1) / 4);
                std::vector<std::int8_t> local;
                const std::vector<std::int8_t>* table = &chars;
                unsigned lm = Lmax;
                if (S > Lmax) {
                    local = bounds::iterate_characters(f, S);
                    table = &local;
                    lm = S;
                }
                const auto r = bounds::run_bound_check(signs, sign, *table, q, lm);
                ordered_json j = row("run_bound");
                j["a"] = ac;
                j["report"] = report::to_json(r);
                out.jsonl.push_back(j.dump());
                if (!r.applicable()) ++st.run_cycle_constant;
                else (r.pass() ? st.run_pass : st.run_fail)++;
            }
        }
    }
    if (cfg.checks.ratios && two_ordinary) {
        ordered_json j = row("ratios");
        j["formula_exponent"] = {{"orbit_over_m", own.orbit_ratio[0].value}, {"run", own.run_ratio[0].value}};
        j["exponent_5_6"] = {{"orbit_over_m", own.orbit_ratio[1].value}, {"run", own.run_ratio[1].value}};
        out.jsonl.push_back(j.dump());
    }
    for (int k = 0; k < 2; ++k) {
        st.orbit_ratio[k] = own.orbit_ratio[k];
        st.run_ratio[k] = own.run_ratio[k];
    }
    return out;
}

ordered_json ratio_json(const Ratio& r) {
    return {{"value", r.value}, {"f", r.f}, {"a", r.a}};
}

}  // namespace

Space parse_space(const std::string& name) {
    if (name == "all") return Space::All;
    if (name == "monic") return Space::Monic;
    throw Error(ErrorKind::Parse, "unknown coefficient space '" + name + "' (expected all or monic)");
}

Checks parse_checks(const std::string& list) {
    Checks c{false, false, false, false, false};
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item == "classification") c.classification = true;
        else if (item == "weil") c.weil = true;
        else if (item == "orbit-bounds") c.orbit_bounds = true;
        else if (item == "run-bounds") c.run_bounds = true;
        else if (item == "ratios") c.ratios = true;
        else if (item == "all") c = {true, true, true, true, true};
        else throw Error(ErrorKind::Parse, "unknown check '" + item + "'");
    }
    return c;
}

std::uint64_t space_size(std::uint64_t q, unsigned degree, Space space) {
    const std::uint64_t base = fpoly::saturating_power(q, degree);
    if (space == Space::Monic) return base;
    if (base > UINT64_MAX / (q - 1)) return UINT64_MAX;
    return base * (q - 1);
}

fpoly::Poly poly_at(const ff::FieldPtr& field, unsigned degree, Space space, std::uint64_t index) {
    const std::uint64_t q = field->q();
    std::vector<ff::Code> c(degree + 1);
    for (unsigned j = 0; j < degree; ++j) {
        c[j] = static_cast<ff::Code>(index % q);
        index /= q;
    }
    c[degree] = space == Space::Monic ? 1 : static_cast<ff::Code>(1 + index);
    return fpoly::Poly(field, std::move(c));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % n;
    }
}

std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count, std::uint64_t seed) {
    std::vector<std::uint64_t> out;
    if (count >= total) {
        out.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) out[i] = i;
        return out;
    }
    // Floyd's algorithm: exactly `count` draws, no rejection on duplicates.
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = total - count; j < total; ++j) {
        const std::uint64_t t = uniform_below(rng, j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

ordered_json config_json(const ScanConfig& c) {
    ordered_json j;
    j["field"] = ff::Field::parse(c.field)->to_string();
    j["degree"] = c.degree;
    j["space"] = c.space == Space::Monic ? "monic" : "all";
    j["sample"] = c.sample;
    j["seed"] = c.seed;
    ordered_json checks = ordered_json::array();
    if (c.checks.classification) checks.push_back("classification");
    if (c.checks.weil) checks.push_back("weil");
    if (c.checks.orbit_bounds) checks.push_back("orbit-bounds");
    if (c.checks.run_bounds) checks.push_back("run-bounds");
    if (c.checks.ratios) checks.push_back("ratios");
    j["checks"] = checks;
    j["depth"] = c.depth;
    j["budget"] = c.budget;
    j["L"] = c.L;
    return j;
}

ScanOutput run_scan(const ScanConfig& cfg) {
    const auto F = ff::Field::parse(cfg.field);
    if (cfg.degree < 2) throw Error(ErrorKind::DegreeTooSmall, "scan degree must be at least 2");
    const std::uint64_t total = space_size(F->q(), cfg.degree, cfg.space);
    if (total == UINT64_MAX) throw Error(ErrorKind::BudgetExceeded, "coefficient space too large");
    const auto indices = cfg.sample ? sample_indices(total, cfg.sample, cfg.seed) : sample_indices(total, total, 0);

    std::vector<ItemOutput> results(indices.size());
    parallel_for(indices.size(), cfg.workers, [&](std::size_t i) {
        const auto f = poly_at(F, cfg.degree, cfg.space, indices[i]);
        try {
            results[i] = scan_item(cfg, F, f);
        } catch (const Error& e) {
            ordered_json j{{"check", "item"}, {"f", f.to_string()}, {"error", std::string(to_string(e.kind()))},
                           {"message", e.what()}};
            results[i] = ItemOutput{{j.dump()}, {}, {}};
            results[i].stats.errors = 1;
        }
    });

    ScanOutput out;
    ItemStats total_stats;
    std::string jsonl, csv = "q,d,f,a,m,orbit,L,maxB,lhs,rhs,pass\n";
    for (const auto& r : results) {
        for (const auto& l : r.jsonl) jsonl += l + "\n";
        for (const auto& l : r.csv) csv += l + "\n";
        total_stats.merge(r.stats);
    }
    out.jsonl = std::move(jsonl);
    out.csv = std::move(csv);
    out.internal_failure = total_stats.failed();

    const auto& s = total_stats;
    ordered_json sum;
    sum["config"] = config_json(cfg);
    sum["q"] = F->q();
    sum["items"] = indices.size();
    ordered_json forms = ordered_json::object();
    for (char c : std::string("abcde")) forms[std::string(1, c)] = s.forms.count(c) ? s.forms.at(c) : 0;
    sum["classification"] = {{"two_ordinary", s.two_ordinary}, {"forms", forms}};
    if (cfg.depth)
        sum["oracle"] = {{"certified_not", s.oracle_certified},
                         {"consistent", s.oracle_consistent},
                         {"disagreements", s.oracle_disagree}};
    sum["weil"] = {{"pass", s.weil_pass}, {"fail", s.weil_fail}, {"not_applicable", s.weil_na}};
    sum["orbit_bound"] = {{"pass", s.orbit_pass}, {"fail", s.orbit_fail}, {"skipped_not_purely_periodic", s.orbit_skipped}};
    sum["envelope"] = {{"pass", s.envelope_pass}, {"fail", s.envelope_fail}};
    sum["run_bound"] = {{"pass", s.run_pass}, {"fail", s.run_fail}, {"cycle_constant", s.run_cycle_constant}};
    sum["max_run"] = {{"square", s.max_run_square}, {"nonsquare", s.max_run_nonsquare}};
    sum["max_orbit"] = s.max_orbit;
    sum["ratios"] = {
        {"formula_exponent",
         {{"exponent", ratio_exponent(cfg.degree)},
          {"orbit_over_m", ratio_json(s.orbit_ratio[0])},
          {"run", ratio_json(s.run_ratio[0])}}},
        {"exponent_5_6",
         {{"exponent", 5.0 / 6.0}, {"orbit_over_m", ratio_json(s.orbit_ratio[1])}, {"run", ratio_json(s.run_ratio[1])}}}};
    sum["errors"] = s.errors;
    sum["internal_failure"] = out.internal_failure;
    out.summary = std::move(sum);
    return out;
}

void write_scan(const ScanOutput& out, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    std::ofstream(base / "scan.jsonl", std::ios::binary) << out.jsonl;
    std::ofstream(base / "scan.csv", std::ios::binary) << out.csv;
    std::ofstream(base / "summary.json", std::ios::binary) << out.summary.dump(2) << "\n";
}

}  // namespace sqdyn::scan
