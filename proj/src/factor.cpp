#include <algorithm>
#include <map>
#include <random>

#include "sqdyn/fpoly.hpp"

namespace sqdyn::fpoly {

namespace {

void squarefree_rec(const Poly& f, unsigned scale, std::map<unsigned, Poly>& out) {
    auto put = [&](unsigned m, const Poly& s) {
        auto it = out.find(m);
        if (it == out.end()) out.emplace(m, s);
        else it->second = it->second * s;
    };
    Poly c = gcd(f, derivative(f));
    Poly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly part = w / y;
        if (part.degree() > 0) put(i * scale, part);
        w = y;
        c = c / y;
        ++i;
    }
    // What remains is a p-th power.
    if (c.degree() > 0) squarefree_rec(pth_root(c), scale * f.field()->p(), out);
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly x = Poly::x(f.field());
    const std::uint64_t q = f.field()->q();
    Poly h = x % f;
    unsigned e = 0;
    while (f.degree() >= 2 * static_cast<int>(e + 1)) {
        ++e;
        h = powmod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, e);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

// g is monic, squarefree, and a product of irreducibles of degree e.
void equal_degree(const Poly& g, unsigned e, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(e)) {
        out.push_back(g);
        return;
    }
    const auto& F = *g.field();
    const std::uint64_t q = F.q();
    const Poly one(g.field(), {1});
    for (;;) {
        std::vector<Code> rc(static_cast<std::size_t>(g.degree()));
        for (auto& c : rc) c = static_cast<Code>(rng() % q);
        Poly r(g.field(), std::move(rc));
        if (r.degree() < 1) continue;
        // r^((q^e - 1)/2) as (r^(1 + q + ... + q^(e-1)))^((q-1)/2).
        Poly t = r;
        for (unsigned j = 1; j < e; ++j) t = mulmod(powmod(t, q, g), r, g);
        t = powmod(t, (q - 1) / 2, g);
        Poly u = gcd(t - one, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, e, rng, out);
            equal_degree(g / u, e, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ConstantInput, "zero polynomial");
    std::map<unsigned, Poly> parts;
    if (f.degree() >= 1) squarefree_rec(f.monic(), 1, parts);
    std::vector<std::pair<Poly, unsigned>> out;
    for (auto& [m, s] : parts) out.emplace_back(s, m);
    return out;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.degree() < 1) throw Error(ErrorKind::ConstantInput, "cannot factor a constant");
    Factorization out{f.leading(), {}};
    std::mt19937_64 rng(seed);
    for (const auto& [s, mult] : squarefree_decomposition(f)) {
        for (const auto& [g, e] : distinct_degree(s)) {
            std::vector<Poly> irr;
            equal_degree(g, e, rng, irr);
            for (auto& h : irr) out.factors.push_back({std::move(h), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return canonical_less(a.poly, b.poly);
    });
    return out;
}

std::optional<SquareWitness> constant_times_square(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ConstantInput, "zero polynomial");
    Poly h(f.field(), {1});
    for (const auto& [s, mult] : squarefree_decomposition(f)) {
        if (mult % 2 != 0) return std::nullopt;
        for (unsigned i = 0; i < mult / 2; ++i) h = h * s;
    }
    const Element c = f.leading();
    return SquareWitness{c, h, quadratic_character(c) == 1};
}

std::vector<Element> roots(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorKind::ConstantInput, "zero polynomial has every element as a root");
    std::vector<Element> out;
    if (f.degree() < 1) return out;
    const Poly x = Poly::x(f.field());
    // Restrict to the split part gcd(f, x^q - x) before splitting.
    Poly g = gcd(f, powmod(x, f.field()->q(), f.monic()) - x);
    if (g.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    std::vector<Poly> lin;
    equal_degree(g, 1, rng, lin);
    for (const auto& l : lin) out.emplace_back(f.field(), f.field()->neg(l.coeff_code(0)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sqdyn::fpoly
