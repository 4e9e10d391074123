#include "sqdyn/dynamics.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace sqdyn::dynamics {

const Element& OrbitSummary::at(std::size_t l) const {
    if (l < elements.size()) return elements[l];
    return elements[tail + (l - tail) % period];
}

OrbitSummary forward_orbit(const Poly& f, const Element& a) {
    ff::require_same_field(f.field(), a.field());
    if (f.degree() < 1) throw Error(ErrorKind::ConstantInput, "orbit of a constant map");
    OrbitSummary out{a, 0, 1, {}, std::nullopt};
    std::unordered_map<ff::Code, std::size_t> seen;
    ff::Code x = a.code();
    while (true) {
        auto [it, fresh] = seen.emplace(x, out.elements.size());
        if (!fresh) {
            out.tail = it->second;
            out.period = out.elements.size() - out.tail;
            break;
        }
        if (x == 0) out.contains_zero_at = out.elements.size();
        out.elements.emplace_back(a.field(), x);
        x = f.eval(x);
    }
    return out;
}

int SignSequence::at(std::size_t l) const noexcept {
    if (l < signs.size()) return signs[l];
    return signs[orbit_tail + (l - orbit_tail) % orbit_period];
}

SignSequence sign_sequence(const OrbitSummary& orbit) {
    SignSequence s;
    s.orbit_tail = orbit.tail;
    s.orbit_period = orbit.period;
    s.signs.reserve(orbit.size());
    for (const auto& e : orbit.elements) s.signs.push_back(ff::quadratic_character(e));

    const std::size_t t = orbit.tail, P = orbit.period;
    for (std::size_t m = 1; m <= P; ++m) {
        if (P % m != 0) continue;
        bool ok = true;
        for (std::size_t j = 0; j < P && ok; ++j) ok = s.at(t + j) == s.at(t + j + m);
        if (ok) {
            s.sign_period = m;
            break;
        }
    }
    std::size_t tau = t;
    while (tau > 0 && s.at(tau - 1) == s.at(tau - 1 + s.sign_period)) --tau;
    s.sign_tail = tau;
    s.purely_periodic = tau == 0;
    return s;
}

SignSequence sign_sequence(const Poly& f, const Element& a) { return sign_sequence(forward_orbit(f, a)); }

RunResult longest_run(const SignSequence& s, int target) {
    const std::size_t t = s.orbit_tail, P = s.orbit_period;
    bool cycle_constant = true;
    for (std::size_t j = 0; j < P && cycle_constant; ++j) cycle_constant = s.at(t + j) == target;
    if (cycle_constant) {
        std::size_t lead = 0;
        while (lead < t && s.at(t - 1 - lead) == target) ++lead;
        return {lead + P, true};
    }
    RunResult r;
    std::size_t cur = 0;
    for (std::size_t l = 0; l < t + 2 * P; ++l) {
        cur = s.at(l) == target ? cur + 1 : 0;
        r.length = std::max(r.length, cur);
    }
    return r;
}

RunResult longest_run(const Poly& f, const Element& a, int target) {
    return longest_run(sign_sequence(f, a), target);
}

PreimageLevel preimages(const Poly& f, const Element& alpha, unsigned n, unsigned max_ext,
                        std::uint64_t degree_budget) {
    ff::require_same_field(f.field(), alpha.field());
    PreimageLevel out{n, alpha, {}, {}, {}, 0};
    if (n == 0) {
        out.points.push_back(alpha);
        out.total_degree = 1;
        return out;
    }
    const Poly g = fpoly::iterate(f, n, degree_budget) - Poly::constant(alpha);
    if (g.degree() < 1) throw Error(ErrorKind::ConstantInput, "iterate minus alpha is constant");
    std::map<unsigned, fpoly::FieldExtension> embeddings;
    std::map<unsigned, ExtensionPoints> ext;
    for (const auto& fac : fpoly::factor(g).factors) {
        const auto e = static_cast<unsigned>(fac.poly.degree());
        out.total_degree += std::uint64_t{e} * fac.multiplicity;
        if (e == 1) {
            out.points.emplace_back(f.field(), f.field()->neg(fac.poly.coeff_code(0)));
        } else if (e <= max_ext) {
            auto it = embeddings.find(e);
            if (it == embeddings.end()) it = embeddings.emplace(e, fpoly::extend(f.field(), e)).first;
            auto& bucket = ext.try_emplace(e, ExtensionPoints{e, it->second.field, {}}).first->second;
            auto rs = fpoly::roots(it->second.map(fac.poly));
            bucket.points.insert(bucket.points.end(), rs.begin(), rs.end());
        } else {
            ++out.uncounted_factors[e];
        }
    }
    std::sort(out.points.begin(), out.points.end());
    for (auto& [e, pts] : ext) {
        std::sort(pts.points.begin(), pts.points.end());
        out.extension_points.push_back(std::move(pts));
    }
    return out;
}

TreeRepetition tree_is_repeating(const Poly& f, const Element& alpha, unsigned depth, unsigned max_ext,
                                 std::uint64_t degree_budget) {
    ff::require_same_field(f.field(), alpha.field());
    fpoly::check_degree_budget(f.degree(), depth, degree_budget);
    const auto E = fpoly::extend(f.field(), std::max(1u, max_ext));
    const Poly F = E.map(f);
    std::vector<std::set<ff::Code>> levels{{E.image[alpha.code()]}};
    for (unsigned m = 1; m <= depth; ++m) {
        std::set<ff::Code> next;
        for (ff::Code beta : levels.back()) {
            const Poly g = F - Poly(E.field, {beta});
            for (const auto& r : fpoly::roots(g)) next.insert(r.code());
        }
        for (unsigned n = 0; n < m; ++n) {
            for (ff::Code c : next) {
                if (levels[n].count(c)) return {true, Element(E.field, c), n, m};
            }
        }
        levels.push_back(std::move(next));
    }
    return {};
}

}  // namespace sqdyn::dynamics
