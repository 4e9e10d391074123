#include "sqdyn/fpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sqdyn::fpoly {

namespace {

std::vector<Code> mul_codes(const ff::Field& F, std::span<const Code> a, std::span<const Code> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Code> r(a.size() + b.size() - 1, 0);
    if (F.k() == 1) {
        const std::uint64_t p = F.p();
        std::vector<std::uint64_t> acc(r.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            const std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + ai * b[j]) % p;
        }
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Code>(acc[i]);
        return r;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw Error(ErrorKind::InvalidArgument, "polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw Error(ErrorKind::InvalidArgument, "polynomial without a field");
    for (Code c : c_)
        if (c >= field_->q()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    normalize();
}

void Poly::normalize() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Element& c) { return Poly(c.field(), {c.code()}); }

Poly Poly::x(const FieldPtr& field) { return Poly(field, {0, 1}); }

Poly Poly::monomial(const Element& c, std::size_t degree) {
    std::vector<Code> v(degree + 1, 0);
    v[degree] = c.code();
    return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const Element& root) { return Poly(root.field(), {root.field()->neg(root.code()), 1}); }

Poly Poly::parse(const FieldPtr& field, std::string_view text) {
    std::vector<Code> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::Parse, "bad coefficient '" + std::string(tok) + "'");
        if (v < 0) {
            out.push_back(field->from_int(v));
        } else {
            if (static_cast<std::uint64_t>(v) >= field->q())
                throw Error(ErrorKind::Parse, "coefficient " + std::string(tok) + " out of range for " +
                                                  field->to_string());
            out.push_back(static_cast<Code>(v));
        }
        pos = end + 1;
    }
    return Poly(field, std::move(out));
}

Element Poly::coeff(std::size_t i) const { return Element(field_, coeff_code(i)); }

Element Poly::leading() const { return Element(field_, c_.empty() ? 0 : c_.back()); }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_->inv(c_.back()));
}

Poly Poly::scaled(Code c) const {
    std::vector<Code> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Code> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
    return Poly(field_, std::move(v));
}

Code Poly::eval(Code a) const noexcept {
    Code r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, a), c_[i]);
    return r;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

Poly operator+(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field_, g.field_);
    const auto& F = *f.field_;
    std::vector<Code> v(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(f.coeff_code(i), g.coeff_code(i));
    return Poly(f.field_, std::move(v));
}

Poly operator-(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field_, g.field_);
    const auto& F = *f.field_;
    std::vector<Code> v(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(f.coeff_code(i), g.coeff_code(i));
    return Poly(f.field_, std::move(v));
}

Poly operator*(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field_, g.field_);
    return Poly(f.field_, mul_codes(*f.field_, f.c_, g.c_));
}

bool operator==(const Poly& f, const Poly& g) noexcept {
    return f.c_ == g.c_ && ff::same_field(f.field_, g.field_);
}

bool canonical_less(const Poly& f, const Poly& g) noexcept {
    if (f.c_.size() != g.c_.size()) return f.c_.size() < g.c_.size();
    return f.c_ < g.c_;
}

Poly poly_arith(const Poly& f, const Poly& g, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return f + g;
        case PolyOp::Sub: return f - g;
        case PolyOp::Mul: return f * g;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown operation");
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field(), g.field());
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const auto& F = *f.field();
    const auto gc = g.codes();
    std::vector<Code> r(f.codes().begin(), f.codes().end());
    const std::size_t n = gc.size() - 1;
    if (r.size() <= n) return {Poly(f.field()), f};
    std::vector<Code> quot(r.size() - n, 0);
    const Code inv_lc = F.inv(gc.back());
    for (std::size_t i = r.size(); i-- > n;) {
        const Code c = F.mul(r[i], inv_lc);
        if (c == 0) continue;
        quot[i - n] = c;
        for (std::size_t j = 0; j <= n; ++j) r[i - n + j] = F.sub(r[i - n + j], F.mul(c, gc[j]));
    }
    r.resize(n);
    return {Poly(f.field(), std::move(quot)), Poly(f.field(), std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

Poly compose(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field(), g.field());
    Poly r(f.field());
    const auto c = f.codes();
    for (std::size_t i = c.size(); i-- > 0;) r = r * g + Poly(f.field(), {c[i]});
    return r;
}

std::uint64_t saturating_power(std::uint64_t base, unsigned n) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

void check_degree_budget(int degree, unsigned n, std::uint64_t budget) {
    const std::uint64_t d = degree < 0 ? 0 : static_cast<std::uint64_t>(degree);
    if (saturating_power(d, n) > budget)
        throw Error(ErrorKind::DegreeBudgetExceeded, std::to_string(d) + "^" + std::to_string(n) +
                                                          " exceeds degree budget " + std::to_string(budget));
}

Poly iterate(const Poly& f, unsigned n, std::uint64_t degree_budget) {
    check_degree_budget(f.degree(), n, degree_budget);
    Poly r = Poly::x(f.field());
    for (unsigned i = 0; i < n; ++i) r = compose(f, r);
    return r;
}

Poly derivative(const Poly& f) {
    const auto c = f.codes();
    if (c.size() <= 1) return Poly(f.field());
    const auto& F = *f.field();
    std::vector<Code> v(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), c[i]);
    return Poly(f.field(), std::move(v));
}

Poly gcd(const Poly& f, const Poly& g) {
    ff::require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Element evaluate(const Poly& f, const Element& a) {
    ff::require_same_field(f.field(), a.field());
    return Element(f.field(), f.eval(a.code()));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
    base = base % m;
    Poly r = Poly(m.field(), {1}) % m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        e >>= 1;
        if (e) base = mulmod(base, base, m);
    }
    return r;
}

Poly pth_root(const Poly& f) {
    const auto& F = *f.field();
    const auto c = f.codes();
    const std::size_t p = F.p();
    std::vector<Code> v;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % p != 0) {
            if (c[i] != 0) throw Error(ErrorKind::InvalidArgument, "polynomial is not a p-th power");
            continue;
        }
        v.push_back(F.frobenius_inverse(c[i]));
    }
    return Poly(f.field(), std::move(v));
}

std::vector<Code> value_table(const Poly& f) {
    std::vector<Code> out(f.field()->q());
    for (Code a = 0; a < out.size(); ++a) out[a] = f.eval(a);
    return out;
}

Poly Factorization::expand() const {
    Poly r = Poly::constant(unit);
    for (const auto& fac : factors)
        for (unsigned i = 0; i < fac.multiplicity; ++i) r = r * fac.poly;
    return r;
}

Element FieldExtension::map(const Element& x) const {
    ff::require_same_field(base, x.field());
    return Element(field, image[x.code()]);
}

Poly FieldExtension::map(const Poly& f) const {
    ff::require_same_field(base, f.field());
    std::vector<Code> v;
    for (Code c : f.codes()) v.push_back(image[c]);
    return Poly(field, std::move(v));
}

FieldExtension extend(const FieldPtr& base, unsigned degree) {
    if (degree == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
    FieldExtension ext{base, nullptr, degree, {}};
    if (degree == 1) {
        ext.field = base;
    } else {
        ext.field = ff::Field::make(base->p(), base->k() * degree);
    }
    const auto& big = *ext.field;
    ext.image.resize(base->q());
    if (base->k() == 1 || degree == 1) {
        for (Code c = 0; c < base->q(); ++c) ext.image[c] = c;
        return ext;
    }
    // Prime-field codes agree in both fields, so the base modulus maps verbatim.
    std::vector<Code> m(base->modulus().begin(), base->modulus().end());
    const auto theta_roots = roots(Poly(ext.field, m));
    if (theta_roots.empty()) throw Error(ErrorKind::InvalidArgument, "base modulus has no root in extension");
    const Code theta = theta_roots.front().code();
    for (Code c = 0; c < base->q(); ++c) {
        const auto co = base->coords(c);
        Code acc = 0;
        for (std::size_t i = co.size(); i-- > 0;) acc = big.add(big.mul(acc, theta), co[i]);
        ext.image[c] = acc;
    }
    return ext;
}

}  // namespace sqdyn::fpoly
