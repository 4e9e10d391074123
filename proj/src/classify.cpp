#include "sqdyn/classify.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace sqdyn::classify {

namespace {

void require_degree(const Poly& f) {
    if (f.degree() < 2) throw Error(ErrorKind::DegreeTooSmall, "degree must be at least 2");
}

Element integer(const FieldPtr& F, std::int64_t v) { return ff::element(F, v); }

// The witness sign is fixed so that poly(0) is the canonical square root of r0sq.
Poly canonical_branch(const Poly& H, const Element& r0sq) {
    const Element r = ff::square_root(r0sq);
    return H.coeff(0) == r ? H : -H;
}

bool is_power_of(std::uint64_t d, std::uint64_t p, unsigned& e) {
    e = 0;
    while (d > 1 && d % p == 0) {
        d /= p;
        ++e;
    }
    return d == 1 && e >= 1;
}

}  // namespace

char form_letter(Form f) noexcept { return static_cast<char>('a' + static_cast<int>(f)); }

Poly FormMatch::rebuild() const {
    const FieldPtr& F = A.field();
    const Poly cA = Poly::constant(A);
    switch (form) {
        case Form::A: {
            Poly lin = Poly::linear(*B);
            Poly r = cA;
            std::uint64_t d = fpoly::saturating_power(F->p(), *e);
            for (std::uint64_t i = 0; i < d; ++i) r = r * lin;
            return r;
        }
        case Form::B: return cA * *poly * *poly;
        case Form::C: return cA * Poly::x(F) * *poly * *poly;
        case Form::D: return cA * *poly * *poly + Poly::constant(*B);
        case Form::E: return cA * Poly::linear(*B) * *poly * *poly;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown form");
}

std::optional<FormMatch> match_form_a(const Poly& f) {
    require_degree(f);
    const auto fa = fpoly::factor(f);
    if (fa.factors.size() != 1 || fa.factors[0].poly.degree() != 1) return std::nullopt;
    unsigned e = 0;
    if (!is_power_of(static_cast<std::uint64_t>(f.degree()), f.field()->p(), e)) return std::nullopt;
    const Element B(f.field(), f.field()->neg(fa.factors[0].poly.coeff_code(0)));
    return FormMatch{Form::A, fa.unit, B, e, std::nullopt};
}

std::optional<FormMatch> match_form_b(const Poly& f) {
    require_degree(f);
    if (f.degree() % 2 != 0) return std::nullopt;
    auto w = fpoly::constant_times_square(f);
    if (!w) return std::nullopt;
    return FormMatch{Form::B, w->c, std::nullopt, std::nullopt, w->h};
}

std::optional<FormMatch> match_form_c(const Poly& f) {
    require_degree(f);
    if (f.degree() % 2 == 0 || f.coeff_code(0) != 0) return std::nullopt;
    auto w = fpoly::constant_times_square(f / Poly::x(f.field()));
    if (!w) return std::nullopt;
    return FormMatch{Form::C, w->c, std::nullopt, std::nullopt, w->h};
}

std::optional<FormMatch> match_form_d(const Poly& f) {
    require_degree(f);
    // A a_0^2 = -B forces f(0) = 0.
    if (f.degree() % 2 != 0 || f.coeff_code(0) != 0) return std::nullopt;
    const FieldPtr& F = f.field();
    const auto n = static_cast<unsigned>(f.degree() / 2);
    for (ff::Code b = 1; b < F->q(); ++b) {
        const Element B(F, b);
        auto w = fpoly::constant_times_square(f - Poly::constant(B));
        if (!w) continue;
        const Element& A = w->c;
        if (A * w->h.coeff(0) * w->h.coeff(0) != -B) continue;
        Poly h = canonical_branch(w->h, -B / A);
        if (!satisfies_even_recurrence(h, B, n)) continue;
        return FormMatch{Form::D, A, B, std::nullopt, std::move(h)};
    }
    return std::nullopt;
}

std::optional<FormMatch> match_form_e(const Poly& f) {
    require_degree(f);
    if (f.degree() % 2 == 0) return std::nullopt;
    const FieldPtr& F = f.field();
    const auto n = static_cast<unsigned>((f.degree() - 1) / 2);
    const Element minus_one = integer(F, -1);
    for (ff::Code b = 1; b < F->q(); ++b) {
        if (f.eval(b) != 0) continue;
        const Element B(F, b);
        auto w = fpoly::constant_times_square(f / Poly::linear(B));
        if (!w) continue;
        const Element& A = w->c;
        if (A * w->h.coeff(0) * w->h.coeff(0) != minus_one) continue;
        Poly g = canonical_branch(w->h, minus_one / A);
        if (!satisfies_odd_recurrence(g, B, n)) continue;
        return FormMatch{Form::E, A, B, std::nullopt, std::move(g)};
    }
    return std::nullopt;
}

bool satisfies_even_recurrence(const Poly& h, const Element& B, unsigned n) {
    if (h.degree() > static_cast<int>(n)) return false;
    const FieldPtr& F = h.field();
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i) {
        const std::int64_t nn = n;
        const Element lhs = integer(F, i * (2 * i - 1)) * B * h.coeff(static_cast<std::size_t>(i));
        const Element rhs = integer(F, -2 * (nn + i - 1) * (nn - i + 1)) * h.coeff(static_cast<std::size_t>(i - 1));
        if (lhs != rhs) return false;
    }
    return true;
}

bool satisfies_odd_recurrence(const Poly& g, const Element& B, unsigned n) {
    if (g.degree() > static_cast<int>(n)) return false;
    const FieldPtr& F = g.field();
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i) {
        const std::int64_t nn = n;
        const Element lhs = integer(F, i * (2 * i - 1)) * B * g.coeff(static_cast<std::size_t>(i));
        const Element rhs = integer(F, -2 * (nn - i + 1) * (nn + i)) * g.coeff(static_cast<std::size_t>(i - 1));
        if (lhs != rhs) return false;
    }
    return true;
}

OrdinaryVerdict classify_ordinary(const Poly& f) {
    auto a = match_form_a(f);
    if (a) return {false, std::move(a)};
    return {true, std::nullopt};
}

ClassificationReport classify_2_ordinary(const Poly& f) {
    require_degree(f);
    ClassificationReport r;
    for (auto match : {match_form_a, match_form_b, match_form_c, match_form_d, match_form_e})
        if (auto m = match(f)) r.forms.push_back(std::move(*m));
    r.two_ordinary = r.forms.empty();
    r.ordinary.ordinary = true;
    for (const auto& m : r.forms)
        if (m.form == Form::A) r.ordinary = {false, m};
    return r;
}

HnSequence hn_sequence(const Element& A, const Element& B, std::uint64_t d, std::size_t max_n) {
    ff::require_same_field(A.field(), B.field());
    if (A.is_zero()) throw Error(ErrorKind::ZeroA, "A must be nonzero");
    HnSequence out;
    std::unordered_map<ff::Code, std::size_t> seen;
    Element Z = A, W = -B;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n > 0) {
            Z = A * ff::pow(Z, d);
            W = A * ff::pow(W, d) - B;
        }
        Element H = W / Z;
        auto [it, fresh] = seen.emplace(H.code(), n);
        out.H.push_back(H);
        if (!fresh) {
            out.first = it->second;
            out.second = n;
            out.repeated = true;
            break;
        }
    }
    return out;
}

Poly family_core(const FamilyParams& params, unsigned d) {
    const FieldPtr& F = params.A.field();
    ff::require_same_field(F, params.B.field());
    const bool even = params.family == Family::D;
    if (d < 2 || (d % 2 == 0) != even)
        throw Error(ErrorKind::ParityMismatch, std::string("family ") + (even ? "d needs even" : "e needs odd") +
                                                   " degree >= 2, got " + std::to_string(d));
    if (params.A.is_zero()) throw Error(ErrorKind::ZeroA, "A must be nonzero");
    const std::int64_t n = even ? d / 2 : (d - 1) / 2;
    std::vector<Element> div;
    for (std::int64_t i = 1; i <= n; ++i) {
        Element v = integer(F, i * (2 * i - 1)) * params.B;
        if (v.is_zero())
            throw Error(ErrorKind::RecurrenceDivisorVanishes,
                        "i(2i-1)B vanishes at i = " + std::to_string(i) + " over " + F->to_string());
        div.push_back(v);
    }
    const Element target = even ? -params.B / params.A : integer(F, -1) / params.A;
    auto r = F->sqrt(target.code());
    if (!r)
        throw Error(ErrorKind::SqrtDoesNotExist,
                    std::string(even ? "-B/A" : "-1/A") + " = " + target.to_string() + " is not a square");
    Element a(F, params.sign >= 0 ? *r : F->neg(*r));
    std::vector<ff::Code> coeffs{a.code()};
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t num = even ? -2 * (n + i - 1) * (n - i + 1) : -2 * (n - i + 1) * (n + i);
        a = integer(F, num) * a / div[static_cast<std::size_t>(i - 1)];
        coeffs.push_back(a.code());
    }
    Poly core(F, std::move(coeffs));
    if (core.degree() != n) throw Error(ErrorKind::DegreeMismatch, "recurrence produced a degenerate polynomial");
    return core;
}

Poly generate_family(const FamilyParams& params, unsigned d) {
    const Poly core = family_core(params, d);
    const Poly A = Poly::constant(params.A);
    if (params.family == Family::D) return A * core * core + Poly::constant(params.B);
    return A * Poly::linear(params.B) * core * core;
}

namespace {

OracleResult run_oracle(const Poly& f, unsigned depth, std::uint64_t seed, std::uint64_t degree_budget,
                        bool odd_only) {
    require_degree(f);
    fpoly::check_degree_budget(f.degree(), depth, degree_budget);
    const FieldPtr& F = f.field();
    auto key = [](const Poly& g) { return std::vector<ff::Code>(g.codes().begin(), g.codes().end()); };
    std::vector<fpoly::Factor> level{{Poly::x(F), 1}};
    std::set<std::vector<ff::Code>> seen{key(level[0].poly)};
    for (unsigned n = 1; n <= depth; ++n) {
        std::vector<fpoly::Factor> next;
        for (const auto& [g, m] : level) {
            // Distinct irreducible g give coprime g(f), so factors never collide.
            for (auto& fac : fpoly::factor(fpoly::compose(g, f), seed).factors)
                next.push_back({std::move(fac.poly), fac.multiplicity * m});
        }
        bool found = false;
        for (const auto& fac : next)
            if (!seen.count(key(fac.poly)) && (!odd_only || fac.multiplicity % 2 == 1)) {
                found = true;
                break;
            }
        if (!found) return {OracleStatus::CertifiedNot, n};
        for (const auto& fac : next) seen.insert(key(fac.poly));
        level = std::move(next);
    }
    return {OracleStatus::ConsistentUpTo, depth};
}

}  // namespace

OracleResult oracle_2_ordinary(const Poly& f, unsigned depth, std::uint64_t seed, std::uint64_t degree_budget) {
    return run_oracle(f, depth, seed, degree_budget, true);
}

OracleResult oracle_ordinary(const Poly& f, unsigned depth, std::uint64_t seed, std::uint64_t degree_budget) {
    return run_oracle(f, depth, seed, degree_budget, false);
}

unsigned default_oracle_depth(int degree, std::uint64_t degree_budget) {
    unsigned n = 1;
    while (fpoly::saturating_power(static_cast<std::uint64_t>(degree), n + 1) <= degree_budget) ++n;
    return n;
}

Poly conjugate(const Poly& f, const Element& a, const Element& b) {
    ff::require_same_field(a.field(), b.field());
    ff::require_same_field(f.field(), a.field());
    const Element ai = a.inverse();
    const Poly inner(f.field(), {(-b * ai).code(), ai.code()});
    return Poly::constant(a) * fpoly::compose(f, inner) + Poly::constant(b);
}

std::optional<std::pair<Element, Element>> are_conjugate(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field(), g.field());
    if (f.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "conjugate polynomials share a degree");
    const FieldPtr& F = f.field();
    for (ff::Code a = 1; a < F->q(); ++a)
        for (ff::Code b = 0; b < F->q(); ++b)
            if (conjugate(f, Element(F, a), Element(F, b)) == g) return std::pair{Element(F, a), Element(F, b)};
    return std::nullopt;
}

}  // namespace sqdyn::classify
