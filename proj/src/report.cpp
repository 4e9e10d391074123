#include "sqdyn/report.hpp"

namespace sqdyn::report {

namespace {

ordered_json codes(const std::vector<ff::Element>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& e : v) a.push_back(e.code());
    return a;
}

}  // namespace

ordered_json to_json(const fpoly::Poly& f) { return f.to_string(); }

ordered_json to_json(const dynamics::OrbitSummary& o) {
    ordered_json j;
    j["start"] = o.start.code();
    j["tail"] = o.tail;
    j["period"] = o.period;
    j["elements"] = codes(o.elements);
    j["contains_zero_at"] = o.contains_zero_at ? ordered_json(*o.contains_zero_at) : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const dynamics::SignSequence& s) {
    ordered_json j;
    j["signs"] = s.signs;
    j["index_origin"] = 0;
    j["sign_tail"] = s.sign_tail;
    j["sign_period"] = s.sign_period;
    j["purely_periodic"] = s.purely_periodic;
    return j;
}

ordered_json to_json(const dynamics::RunResult& r) {
    return {{"length", r.length}, {"cycle_constant", r.cycle_constant}};
}

ordered_json to_json(const dynamics::PreimageLevel& p) {
    ordered_json j;
    j["level"] = p.level;
    j["alpha"] = p.alpha.code();
    j["points"] = codes(p.points);
    ordered_json ext = ordered_json::array();
    for (const auto& e : p.extension_points)
        ext.push_back({{"degree", e.degree}, {"field", e.field->to_string()}, {"points", codes(e.points)}});
    j["extension_points"] = ext;
    ordered_json unc = ordered_json::object();
    for (const auto& [deg, n] : p.uncounted_factors) unc[std::to_string(deg)] = n;
    j["uncounted_factors"] = unc;
    j["total_degree"] = p.total_degree;
    return j;
}

ordered_json to_json(const classify::FormMatch& m) {
    ordered_json j;
    j["form"] = std::string(1, classify::form_letter(m.form));
    j["A"] = m.A.code();
    if (m.B) j["B"] = m.B->code();
    if (m.e) j["e"] = *m.e;
    if (m.poly) j[m.form == classify::Form::D ? "h" : "g"] = m.poly->to_string();
    return j;
}

ordered_json to_json(const classify::ClassificationReport& r) {
    ordered_json j;
    j["verdict"] = r.two_ordinary ? "TwoOrdinary" : "NotTwoOrdinary";
    ordered_json forms = ordered_json::array();
    for (const auto& m : r.forms) forms.push_back(to_json(m));
    j["forms"] = forms;
    ordered_json o;
    o["verdict"] = r.ordinary.ordinary ? "Ordinary" : "NotOrdinary";
    if (r.ordinary.witness) o["witness"] = to_json(*r.ordinary.witness);
    j["ordinary"] = o;
    return j;
}

ordered_json to_json(const classify::OracleResult& r) {
    return {{"status", r.status == classify::OracleStatus::CertifiedNot ? "CertifiedNot" : "ConsistentUpTo"},
            {"level", r.level}};
}

ordered_json to_json(const classify::IntPoly& f) {
    ordered_json a = ordered_json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.str());
    return a;
}

ordered_json to_json(const bounds::WeilResult& w) {
    ordered_json j;
    j["applicable"] = w.applicable;
    if (!w.applicable) {
        j["reason"] = w.reason;
        return j;
    }
    j["sum"] = w.sum;
    j["lhs"] = w.lhs.str();
    j["rhs"] = w.rhs.str();
    j["pass"] = w.pass();
    return j;
}

ordered_json to_json(const bounds::BoundReport& b) {
    ordered_json j;
    j["q"] = b.q;
    j["d"] = b.d;
    j["f"] = b.f;
    j["a"] = b.a;
    j["L"] = b.L;
    j["m"] = b.m;
    ordered_json bv = ordered_json::array();
    for (const auto& v : b.B_values) bv.push_back(v.to_string());
    j["B_values"] = bv;
    j["orbit_size"] = b.orbit_size;
    j["max_B"] = b.max_B().to_string();
    j["rhs_sum"] = b.sum_rhs().to_string();
    j["rhs_uniform"] = b.uniform_rhs().to_string();
    j["pass_sum"] = b.pass_sum();
    j["pass_uniform"] = b.pass_uniform();
    return j;
}

ordered_json to_json(const bounds::EnvelopeResult& e) {
    return {{"B", e.B.to_string()},
            {"lhs", e.lhs.str()},
            {"rhs_squared", e.rhs_squared.str()},
            {"pass", e.pass()}};
}

ordered_json to_json(const bounds::RunBoundReport& r) {
    ordered_json j;
    j["sign"] = r.sign;
    j["R"] = r.R;
    j["cycle_constant"] = r.cycle_constant;
    if (!r.applicable()) return j;
    j["S"] = r.S;
    ordered_json t = ordered_json::array();
    for (const auto& [L, n] : r.t_sizes) t.push_back({{"L", L}, {"T", n}});
    j["T"] = t;
    j["pass"] = r.pass();
    return j;
}

}  // namespace sqdyn::report
