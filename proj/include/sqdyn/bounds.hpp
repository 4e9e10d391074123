#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqdyn/dynamics.hpp"
#include "sqdyn/fpoly.hpp"

namespace sqdyn::bounds {

using BigInt = boost::multiprecision::cpp_int;
using ff::Element;
using fpoly::Poly;

/// Cap on q * L * (d + 1) field operations per enumeration kernel.
inline constexpr std::uint64_t kDefaultEvalBudget = std::uint64_t{1} << 34;

/// numerator / 2^L
struct Dyadic {
    BigInt numerator;
    unsigned L = 0;

    std::string to_string() const;
    double to_double() const;
    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

std::int64_t char_sum(const Poly& f);

struct WeilResult {
    bool applicable = false;
    std::string reason;
    std::int64_t sum = 0;
    /// |sum|^2 and (d-1)^2 q
    BigInt lhs;
    BigInt rhs;

    bool pass() const { return !applicable || lhs <= rhs; }
};

WeilResult weil_check(const Poly& f);

/// chi(f^l(x)) for l = 1..L and every x in code order; row x holds L entries.
std::vector<std::int8_t> iterate_characters(const Poly& f, unsigned L,
                                            std::uint64_t eval_budget = kDefaultEvalBudget);

/// sum_x prod_{l=1..L} (1 + s(l+i) chi(f^l(x))) / 2^L with s(j) = chi(f^j(a)).
/// Throws NotPurelyPeriodic when l + i reaches into the sign tail.
Dyadic compute_B(const Poly& f, const Element& a, std::size_t i, unsigned L,
                 std::uint64_t eval_budget = kDefaultEvalBudget);

/// Same from precomputed tables; `signs` is the sign sequence of a.
Dyadic compute_B(const std::vector<std::int8_t>& chars, std::uint32_t q, const dynamics::SignSequence& signs,
                 std::size_t i, unsigned L);

struct BoundReport {
    std::uint32_t q = 0;
    int d = 0;
    std::string f;
    std::string a;
    unsigned L = 0;
    std::size_t m = 0;
    std::vector<Dyadic> B_values;
    std::size_t orbit_size = 0;

    /// |O| against 2L + 1 + sum_i B_i.
    Dyadic sum_rhs() const;
    /// |O| against 2L + 1 + m max_i B_i.
    Dyadic uniform_rhs() const;
    Dyadic max_B() const;
    bool pass_sum() const;
    bool pass_uniform() const;
};

/// Requires a purely periodic sign sequence (throws NotPurelyPeriodic).
BoundReport orbit_bound_check(const Poly& f, const Element& a, unsigned L,
                              std::uint64_t eval_budget = kDefaultEvalBudget);
BoundReport orbit_bound_check(const Poly& f, const Element& a, unsigned L, const std::vector<std::int8_t>& chars);

struct EnvelopeResult {
    Dyadic B;
    std::uint32_t q = 0;
    int d = 0;
    /// 2^L B - q; the bound reads lhs <= 2^L d^{L+1} sqrt(q).
    BigInt lhs;
    /// 4^L d^{2L+2} q, compared with lhs^2 when lhs > 0.
    BigInt rhs_squared;

    bool pass() const { return lhs <= 0 || lhs * lhs <= rhs_squared; }
};

EnvelopeResult envelope_holds(const Dyadic& B, std::uint32_t q, int d);
/// Throws NotTwoOrdinary or NotPurelyPeriodic.
EnvelopeResult envelope_check(const Poly& f, const Element& a, std::size_t i, unsigned L,
                              std::uint64_t eval_budget = kDefaultEvalBudget);

/// |T(L)|: x with chi(f^l(x)) == sign for all l in 1..L. T(0) = q.
std::uint64_t t_set_size(const Poly& f, unsigned L, int sign = +1,
                         std::uint64_t eval_budget = kDefaultEvalBudget);
std::uint64_t t_set_size(const std::vector<std::int8_t>& chars, std::uint32_t q, unsigned Lmax, unsigned L,
                         int sign);

struct RunBoundReport {
    int sign = +1;
    std::size_t R = 0;
    std::size_t S = 0;
    bool cycle_constant = false;
    /// (L, |T(L)|) for L = 1..S
    std::vector<std::pair<unsigned, std::uint64_t>> t_sizes;

    bool applicable() const { return !cycle_constant; }
    bool pass() const;
};

/// S = floor((R - 1)/4) from the longest run R of the given sign, then
/// S <= |T(L)| for every L <= S. Cycle-constant orbits are not applicable.
RunBoundReport run_bound_check(const Poly& f, const Element& a, int sign = +1,
                               std::uint64_t eval_budget = kDefaultEvalBudget);
/// Same from precomputed characters of f covering at least S levels (Lmax).
RunBoundReport run_bound_check(const dynamics::SignSequence& signs, int sign, const std::vector<std::int8_t>& chars,
                               std::uint32_t q, unsigned Lmax);

/// Largest L with 4^L d^{2L} d^2 <= q, at least 1.
unsigned choose_L(std::uint64_t q, std::uint64_t d);

}  // namespace sqdyn::bounds
