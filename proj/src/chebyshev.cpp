#include "sqdyn/chebyshev.hpp"

#include <sstream>

namespace sqdyn::classify {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<BigInt> v(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) + g.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<BigInt> v(std::max(f.c_.size(), g.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.coeff(i) - g.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<BigInt> v(f.c_.size() + g.c_.size() - 1);
    for (std::size_t i = 0; i < f.c_.size(); ++i)
        for (std::size_t j = 0; j < g.c_.size(); ++j) v[i + j] += f.c_[i] * g.c_[j];
    return IntPoly(std::move(v));
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = r * g + IntPoly::constant(c[i]);
    return r;
}

IntPoly exact_div(const IntPoly& f, const IntPoly& m) {
    if (m.is_zero() || m.coeffs().back() != 1) throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
    std::vector<BigInt> r = f.coeffs();
    const auto& mc = m.coeffs();
    const std::size_t n = mc.size() - 1;
    if (r.size() <= n) {
        if (!f.is_zero()) throw Error(ErrorKind::InvalidArgument, "division leaves a remainder");
        return {};
    }
    std::vector<BigInt> quot(r.size() - n);
    for (std::size_t i = r.size(); i-- > n;) {
        const BigInt c = r[i];
        quot[i - n] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= n; ++j) r[i - n + j] -= c * mc[j];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (r[i] != 0) throw Error(ErrorKind::InvalidArgument, "division leaves a remainder");
    return IntPoly(std::move(quot));
}

fpoly::Poly reduce(const IntPoly& f, const ff::FieldPtr& field) {
    std::vector<ff::Code> v;
    const BigInt p = field->p();
    for (const auto& c : f.coeffs()) {
        BigInt r = c % p;
        if (r < 0) r += p;
        v.push_back(static_cast<ff::Code>(r));
    }
    return fpoly::Poly(field, std::move(v));
}

IntPoly chebyshev(unsigned d) {
    IntPoly prev = IntPoly::constant(1), cur = IntPoly::x();
    if (d == 0) return prev;
    const IntPoly two_x({0, 2});
    for (unsigned i = 1; i < d; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly tilde_chebyshev(unsigned d) {
    // Coefficient of x^i in 2 T_d(x/2) is 2 t_i / 2^i; always an integer.
    const IntPoly T = chebyshev(d);
    const auto& t = T.coeffs();
    std::vector<BigInt> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        BigInt num = 2 * t[i];
        BigInt den = BigInt(1) << i;
        if (num % den != 0) throw Error(ErrorKind::InvalidArgument, "non-integral rescaled Chebyshev coefficient");
        v[i] = num / den;
    }
    return IntPoly(std::move(v));
}

IntPoly cyclotomic(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    std::vector<BigInt> v(n + 1);
    v[0] = -1;
    v[n] = 1;
    IntPoly r(std::move(v));
    for (unsigned m = 1; m < n; ++m)
        if (n % m == 0) r = exact_div(r, cyclotomic(m));
    return r;
}

IntPoly psi(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "psi index must be positive");
    if (n == 1) return IntPoly({-2, 1});
    if (n == 2) return IntPoly({2, 1});
    // Phi_n is palindromic of even degree 2m. Peel off b_j x^{m-j}(x^2+1)^j from
    // the top, reading b_j at x^{m+j}, so that sum b_j y^j = psi_n(y).
    IntPoly rest = cyclotomic(n);
    const auto m = static_cast<std::size_t>(rest.degree() / 2);
    std::vector<IntPoly> powers{IntPoly::constant(1)};
    const IntPoly x2p1({1, 0, 1});
    for (std::size_t j = 1; j <= m; ++j) powers.push_back(powers.back() * x2p1);
    std::vector<BigInt> b(m + 1);
    for (std::size_t j = m + 1; j-- > 0;) {
        b[j] = rest.coeff(m + j);
        if (b[j] == 0) continue;
        std::vector<BigInt> shift(m - j + 1);
        shift[m - j] = b[j];
        rest = rest - IntPoly(std::move(shift)) * powers[j];
    }
    if (!rest.is_zero()) throw Error(ErrorKind::InvalidArgument, "cyclotomic polynomial not palindromic");
    return IntPoly(std::move(b));
}

}  // namespace sqdyn::classify
