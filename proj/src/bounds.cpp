#include "sqdyn/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sqdyn/classify.hpp"

namespace sqdyn::bounds {

namespace {

void check_eval_budget(std::uint64_t q, unsigned L, int d, std::uint64_t budget) {
    const std::uint64_t cost = q * std::max(1u, L) * static_cast<std::uint64_t>(std::max(d, 0) + 1);
    if (cost > budget)
        throw Error(ErrorKind::BudgetExceeded, "enumeration of q * L * (d + 1) = " + std::to_string(cost) +
                                                   " operations exceeds budget " + std::to_string(budget));
}

}  // namespace

std::string Dyadic::to_string() const {
    if (L == 0) return numerator.str();
    return numerator.str() + "/" + (BigInt(1) << L).str();
}

double Dyadic::to_double() const { return numerator.convert_to<double>() / std::ldexp(1.0, static_cast<int>(L)); }

std::int64_t char_sum(const Poly& f) {
    const auto& F = *f.field();
    std::int64_t s = 0;
    for (ff::Code x = 0; x < F.q(); ++x) s += F.chi(f.eval(x));
    return s;
}

WeilResult weil_check(const Poly& f) {
    WeilResult r;
    if (f.is_zero() || fpoly::constant_times_square(f)) {
        r.reason = "constant-times-square";
        return r;
    }
    r.applicable = true;
    r.sum = char_sum(f);
    r.lhs = BigInt(r.sum) * r.sum;
    const BigInt dm1 = f.degree() - 1;
    r.rhs = dm1 * dm1 * f.field()->q();
    return r;
}

std::vector<std::int8_t> iterate_characters(const Poly& f, unsigned L, std::uint64_t eval_budget) {
    const auto& F = *f.field();
    check_eval_budget(F.q(), L, f.degree(), eval_budget);
    std::vector<std::int8_t> out(static_cast<std::size_t>(F.q()) * L);
    for (ff::Code x = 0; x < F.q(); ++x) {
        ff::Code y = x;
        for (unsigned l = 0; l < L; ++l) {
            y = f.eval(y);
            out[static_cast<std::size_t>(x) * L + l] = static_cast<std::int8_t>(F.chi(y));
        }
    }
    return out;
}

Dyadic compute_B(const std::vector<std::int8_t>& chars, std::uint32_t q, const dynamics::SignSequence& signs,
                 std::size_t i, unsigned L) {
    if (L == 0) throw Error(ErrorKind::InvalidArgument, "L must be at least 1");
    if (1 + i < signs.sign_tail)
        throw Error(ErrorKind::NotPurelyPeriodic, "offset reaches into the sign tail");
    const std::size_t stride = chars.size() / q;
    if (stride < L) throw Error(ErrorKind::InvalidArgument, "character table shorter than L");
    std::vector<int> s(L);
    for (unsigned l = 1; l <= L; ++l) s[l - 1] = signs.at(l + i);
    // Each factor 1 + s chi lies in {0, 1, 2}; the product is 0 or a power of two.
    std::uint64_t total = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
        const std::int8_t* row = &chars[static_cast<std::size_t>(x) * stride];
        unsigned shift = 0;
        bool zero = false;
        for (unsigned l = 0; l < L && !zero; ++l) {
            const int v = 1 + s[l] * row[l];
            if (v == 0) zero = true;
            else if (v == 2) ++shift;
        }
        if (!zero) total += std::uint64_t{1} << shift;
    }
    return {BigInt(total), L};
}

Dyadic compute_B(const Poly& f, const Element& a, std::size_t i, unsigned L, std::uint64_t eval_budget) {
    if (L > 40) throw Error(ErrorKind::BudgetExceeded, "L above 40 overflows the exact accumulator");
    const auto chars = iterate_characters(f, L, eval_budget);
    return compute_B(chars, f.field()->q(), dynamics::sign_sequence(f, a), i, L);
}

Dyadic BoundReport::max_B() const {
    Dyadic m{0, L};
    for (const auto& b : B_values) m.numerator = std::max(m.numerator, b.numerator);
    return m;
}

Dyadic BoundReport::sum_rhs() const {
    Dyadic r{BigInt(2 * L + 1) << L, L};
    for (const auto& b : B_values) r.numerator += b.numerator;
    return r;
}

Dyadic BoundReport::uniform_rhs() const {
    return {(BigInt(2 * L + 1) << L) + BigInt(m) * max_B().numerator, L};
}

bool BoundReport::pass_sum() const { return (BigInt(orbit_size) << L) <= sum_rhs().numerator; }

bool BoundReport::pass_uniform() const { return (BigInt(orbit_size) << L) <= uniform_rhs().numerator; }

BoundReport orbit_bound_check(const Poly& f, const Element& a, unsigned L, const std::vector<std::int8_t>& chars) {
    const auto orbit = dynamics::forward_orbit(f, a);
    const auto signs = dynamics::sign_sequence(orbit);
    if (!signs.purely_periodic)
        throw Error(ErrorKind::NotPurelyPeriodic, "sign sequence of " + a.to_string() + " has a tail");
    BoundReport r;
    r.q = f.field()->q();
    r.d = f.degree();
    r.f = f.to_string();
    r.a = a.to_string();
    r.L = L;
    r.m = signs.sign_period;
    r.orbit_size = orbit.size();
    for (std::size_t i = 0; i < r.m; ++i) r.B_values.push_back(compute_B(chars, r.q, signs, i, L));
    return r;
}

BoundReport orbit_bound_check(const Poly& f, const Element& a, unsigned L, std::uint64_t eval_budget) {
    return orbit_bound_check(f, a, L, iterate_characters(f, L, eval_budget));
}

EnvelopeResult envelope_holds(const Dyadic& B, std::uint32_t q, int d) {
    EnvelopeResult r{B, q, d, 0, 0};
    r.lhs = B.numerator - q;
    BigInt dpow = 1;
    for (unsigned i = 0; i < 2 * B.L + 2; ++i) dpow *= d;
    r.rhs_squared = (BigInt(1) << (2 * B.L)) * dpow * q;
    return r;
}

EnvelopeResult envelope_check(const Poly& f, const Element& a, std::size_t i, unsigned L,
                              std::uint64_t eval_budget) {
    if (!classify::classify_2_ordinary(f).two_ordinary)
        throw Error(ErrorKind::NotTwoOrdinary, "envelope requires a dynamically 2-ordinary polynomial");
    const auto signs = dynamics::sign_sequence(f, a);
    if (!signs.purely_periodic) throw Error(ErrorKind::NotPurelyPeriodic, "sign sequence has a tail");
    const auto chars = iterate_characters(f, L, eval_budget);
    return envelope_holds(compute_B(chars, f.field()->q(), signs, i, L), f.field()->q(), f.degree());
}

std::uint64_t t_set_size(const std::vector<std::int8_t>& chars, std::uint32_t q, unsigned Lmax, unsigned L,
                         int sign) {
    if (L == 0) return q;
    if (L > Lmax) throw Error(ErrorKind::InvalidArgument, "character table shorter than L");
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < q; ++x) {
        const std::int8_t* row = &chars[static_cast<std::size_t>(x) * Lmax];
        bool ok = true;
        for (unsigned l = 0; l < L && ok; ++l) ok = row[l] == sign;
        count += ok;
    }
    return count;
}

std::uint64_t t_set_size(const Poly& f, unsigned L, int sign, std::uint64_t eval_budget) {
    if (L == 0) return f.field()->q();
    return t_set_size(iterate_characters(f, L, eval_budget), f.field()->q(), L, L, sign);
}

bool RunBoundReport::pass() const {
    if (!applicable()) return true;
    return std::all_of(t_sizes.begin(), t_sizes.end(), [&](const auto& t) { return S <= t.second; });
}

RunBoundReport run_bound_check(const dynamics::SignSequence& signs, int sign, const std::vector<std::int8_t>& chars,
                               std::uint32_t q, unsigned Lmax) {
    RunBoundReport r;
    r.sign = sign;
    const auto run = dynamics::longest_run(signs, sign);
    r.R = run.length;
    r.cycle_constant = run.cycle_constant;
    if (r.cycle_constant) return r;
    r.S = r.R >= 1 ? (r.R - 1) / 4 : 0;
    if (r.S > Lmax) throw Error(ErrorKind::InvalidArgument, "character table shorter than S");
    for (unsigned L = 1; L <= r.S; ++L) r.t_sizes.emplace_back(L, t_set_size(chars, q, Lmax, L, sign));
    return r;
}

RunBoundReport run_bound_check(const Poly& f, const Element& a, int sign, std::uint64_t eval_budget) {
    const auto signs = dynamics::sign_sequence(f, a);
    const auto run = dynamics::longest_run(signs, sign);
    const auto S = static_cast<unsigned>(!run.cycle_constant && run.length >= 1 ? (run.length - 1) / 4 : 0);
    const unsigned Lmax = std::max(1u, S);
    return run_bound_check(signs, sign, iterate_characters(f, Lmax, eval_budget), f.field()->q(), Lmax);
}

unsigned choose_L(std::uint64_t q, std::uint64_t d) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
    const BigInt Q = q;
    const BigInt D = d;
    unsigned best = 0;
    BigInt lhs = D * D;  // 4^L d^{2L} d^2 at L = 0
    for (unsigned L = 1;; ++L) {
        lhs *= 4 * D * D;
        if (lhs > Q) break;
        best = L;
    }
    return std::max(1u, best);
}

}  // namespace sqdyn::bounds
