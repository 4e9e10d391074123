#include "sqdyn/ff.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace sqdyn::ff {

namespace {

constexpr std::uint32_t kLogTableLimit = 1u << 16;
constexpr std::uint32_t kAddTableLimit = 1024;
constexpr std::uint32_t kChiTableLimit = 1u << 20;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, used only to validate and search moduli.
using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    const std::size_t n = m.size() - 1;  // m monic
    for (std::size_t i = r.size(); i-- > n;) {
        const std::uint64_t c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) r[i - n + j] = (r[i - n + j] + (p - c) * m[j]) % p;
    }
    r.resize(std::min(r.size(), n));
    trim(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
    FpPoly r{1};
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t n = m.size() - 1;
    const std::uint64_t inv_lc = powmod64(m.back(), p - 2, p);
    while (a.size() > n) {
        const std::uint64_t c = a.back() * inv_lc % p;
        const std::size_t shift = a.size() - 1 - n;
        for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
        trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: a monic degree-k polynomial is irreducible iff gcd(x^{p^i} - x, m) = 1
// for every i <= k/2.
bool fp_irreducible(const FpPoly& m, std::uint64_t p) {
    const std::size_t k = m.size() - 1;
    if (k <= 1) return k == 1;
    FpPoly xpow{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        xpow = fp_powmod(xpow, p, m, p);
        FpPoly diff = xpow;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (fp_gcd(m, diff, p).size() > 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::Parse, "bad integer '" + std::string(tok) + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldPtr Field::make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > std::numeric_limits<std::int32_t>::max())
            throw Error(ErrorKind::InvalidArgument, "field too large");
    }

    std::vector<std::uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != k + 1 || mod.back() != 1)
            throw Error(ErrorKind::ReducibleModulus,
                        "modulus must be monic of degree " + std::to_string(k));
        for (auto c : mod)
            if (c >= p) throw Error(ErrorKind::ReducibleModulus, "modulus coefficient out of range");
        FpPoly m(mod.begin(), mod.end());
        if (!fp_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
    } else if (k == 1) {
        mod = {0, 1};
    } else {
        // Tuples (c_0, ..., c_{k-1}) in lexicographic order, c_0 most significant.
        std::vector<std::uint32_t> c(k, 0);
        for (;;) {
            FpPoly m(c.begin(), c.end());
            m.push_back(1);
            if (fp_irreducible(m, p)) {
                mod.assign(c.begin(), c.end());
                mod.push_back(1);
                break;
            }
            std::size_t i = k;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
            }
        }
    }
    return std::make_shared<const Field>(Passkey{}, p, k, std::move(mod));
}

FieldPtr Field::parse(std::string_view text) {
    std::string_view head = text;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        head = text.substr(0, slash);
        std::string_view tail = text.substr(slash + 1);
        if (tail.size() < 2 || tail.front() != '(' || tail.back() != ')')
            throw Error(ErrorKind::Parse, "modulus must be written as (c_0,...,1)");
        modulus = parse_uint_list(tail.substr(1, tail.size() - 2));
    }
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    auto caret = head.find('^');
    auto p_text = head.substr(0, caret);
    auto [ptr, ec] = std::from_chars(p_text.data(), p_text.data() + p_text.size(), p);
    if (p_text.empty() || ec != std::errc() || ptr != p_text.data() + p_text.size())
        throw Error(ErrorKind::Parse, "bad field spec '" + std::string(text) + "'");
    if (caret != std::string_view::npos) {
        auto k_text = head.substr(caret + 1);
        auto [ptr2, ec2] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
        if (k_text.empty() || ec2 != std::errc() || ptr2 != k_text.data() + k_text.size())
            throw Error(ErrorKind::Parse, "bad field spec '" + std::string(text) + "'");
    }
    return make(p, k, std::move(modulus));
}

Field::Field(Passkey, std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < k; ++i) q_ *= p;
    build_tables();
}

void Field::build_tables() {
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    for (Code g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto r : factors)
            if (slow_pow(g, order / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            generator_ = g;
            break;
        }
    }

    if (k_ > 1 && q_ <= kLogTableLimit) {
        exp_.assign(2 * order, 0);
        log_.assign(q_, 0);
        Code x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = x;
            exp_[i + order] = x;
            log_[x] = i;
            x = slow_mul(x, generator_);
        }
    }
    if (k_ > 1 && q_ <= kAddTableLimit) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Code a = 0; a < q_; ++a)
            for (Code b = 0; b < q_; ++b)
                add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(slow_add(a, b, false));
    }
    if (q_ <= kChiTableLimit) {
        chi_table_.assign(q_, -1);
        chi_table_[0] = 0;
        if (k_ == 1) {
            for (std::uint64_t x = 1; x <= (p_ - 1) / 2; ++x) chi_table_[x * x % p_] = 1;
        } else {
            for (Code a = 1; a < q_; ++a) chi_table_[a] = pow(a, order / 2) == 1 ? 1 : -1;
        }
    }
    for (Code z = 1; z < q_; ++z)
        if (chi(z) == -1) {
            nonresidue_ = z;
            break;
        }
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << p_ << '^' << k_;
    if (k_ > 1) {
        os << "/(";
        for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
        os << ')';
    }
    return os.str();
}

bool Field::same_as(const Field& other) const noexcept {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

std::vector<std::uint32_t> Field::coords(Code a) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Code Field::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() != k_) throw Error(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
    Code code = 0;
    for (std::size_t i = k_; i-- > 0;) {
        if (coords[i] >= p_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
        code = code * p_ + coords[i];
    }
    return code;
}

Code Field::slow_add(Code a, Code b, bool subtract) const noexcept {
    Code out = 0;
    Code weight = 1;
    for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t x = a % p_, y = b % p_;
        a /= p_;
        b /= p_;
        const std::uint32_t s = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
        out += s * weight;
        weight *= p_;
    }
    return out;
}

void Field::mul_coords(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const noexcept {
    std::vector<std::uint64_t> r(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
    for (std::size_t i = r.size(); i-- > k_;) {
        const std::uint64_t c = r[i];
        if (c == 0) continue;
        for (unsigned j = 0; j < k_; ++j) r[i - k_ + j] = (r[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    for (unsigned i = 0; i < k_; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
}

Code Field::slow_mul(Code a, Code b) const noexcept {
    if (k_ == 1) return static_cast<Code>(std::uint64_t(a) * b % p_);
    std::vector<std::uint32_t> x(k_), y(k_), z(k_);
    for (unsigned i = 0; i < k_; ++i) {
        x[i] = a % p_;
        a /= p_;
        y[i] = b % p_;
        b /= p_;
    }
    mul_coords(x.data(), y.data(), z.data());
    Code out = 0;
    for (unsigned i = k_; i-- > 0;) out = out * p_ + z[i];
    return out;
}

Code Field::slow_pow(Code a, std::uint64_t e) const noexcept {
    Code r = 1;
    while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return r;
}

Code Field::add(Code a, Code b) const noexcept {
    if (k_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return slow_add(a, b, false);
}

Code Field::neg(Code a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return slow_add(0, a, true);
}

Code Field::sub(Code a, Code b) const noexcept {
    if (k_ == 1) return a >= b ? a - b : a + p_ - b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + neg(b)];
    return slow_add(a, b, true);
}

Code Field::mul(Code a, Code b) const noexcept {
    if (k_ == 1) return static_cast<Code>(std::uint64_t(a) * b % p_);
    if (!exp_.empty()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    return slow_mul(a, b);
}

Code Field::inv(Code a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (k_ == 1) return static_cast<Code>(powmod64(a, e, p_));
    if (!exp_.empty()) {
        const std::uint64_t order = q_ - 1;
        return exp_[(std::uint64_t(log_[a]) * (e % order)) % order];
    }
    return slow_pow(a, e);
}

int Field::chi(Code a) const noexcept {
    if (!chi_table_.empty()) return chi_table_[a];
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

std::optional<Code> Field::sqrt(Code a) const {
    if (a == 0) return Code{0};
    if (chi(a) != 1) return std::nullopt;
    Code r;
    if (q_ % 4 == 3) {
        r = pow(a, (std::uint64_t(q_) + 1) / 4);
    } else {
        // Tonelli-Shanks with the first non-residue in code order.
        std::uint64_t odd = q_ - 1;
        unsigned s = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            ++s;
        }
        Code c = pow(nonresidue_, odd);
        Code t = pow(a, odd);
        r = pow(a, (odd + 1) / 2);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            Code t2 = t;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            Code b = c;
            for (unsigned j = 0; j + 1 < m - i; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    return std::min(r, neg(r));
}

Code Field::from_int(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
}

Code Field::frobenius_inverse(Code a) const noexcept {
    Code r = a;
    for (unsigned i = 1; i < k_; ++i) r = pow(r, p_);
    return r;
}

Element::Element(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_) throw Error(ErrorKind::InvalidArgument, "element without a field");
    if (code_ >= field_->q())
        throw Error(ErrorKind::InvalidArgument,
                    "code " + std::to_string(code_) + " out of range for " + field_->to_string());
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && a->same_as(*b));
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw Error(ErrorKind::MixedFields, "operands live in different fields");
}

Element operator+(const Element& x, const Element& y) {
    require_same_field(x.field_, y.field_);
    return {x.field_, x.field_->add(x.code_, y.code_)};
}

Element operator-(const Element& x, const Element& y) {
    require_same_field(x.field_, y.field_);
    return {x.field_, x.field_->sub(x.code_, y.code_)};
}

Element operator*(const Element& x, const Element& y) {
    require_same_field(x.field_, y.field_);
    return {x.field_, x.field_->mul(x.code_, y.code_)};
}

Element operator/(const Element& x, const Element& y) {
    require_same_field(x.field_, y.field_);
    if (y.code_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return {x.field_, x.field_->div(x.code_, y.code_)};
}

bool operator==(const Element& x, const Element& y) noexcept {
    return x.code_ == y.code_ && same_field(x.field_, y.field_);
}

Element arith(const Element& x, const Element& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown operation");
}

Element pow(const Element& x, std::uint64_t e) { return {x.field(), x.field()->pow(x.code(), e)}; }

int quadratic_character(const Element& x) { return x.field()->chi(x.code()); }

Element square_root(const Element& x) {
    auto r = x.field()->sqrt(x.code());
    if (!r) throw Error(ErrorKind::NonSquare, x.to_string() + " is not a square in " + x.field()->to_string());
    return {x.field(), *r};
}

std::vector<Element> enumerate_elements(const FieldPtr& field) {
    std::vector<Element> out;
    out.reserve(field->q());
    for (Code c = 0; c < field->q(); ++c) out.emplace_back(field, c);
    return out;
}

Element element(const FieldPtr& field, std::int64_t integer) { return {field, field->from_int(integer)}; }

}  // namespace sqdyn::ff
