#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqdyn/fpoly.hpp"

namespace sqdyn::classify {

using ff::Element;
using ff::FieldPtr;
using fpoly::Poly;

enum class Form { A, B, C, D, E };
char form_letter(Form f) noexcept;

/// One matched exceptional form. Field usage per form:
///   a: A, B, e      f = A (x - B)^(p^e)
///   b: A, poly      f = A poly^2
///   c: A, poly      f = A x poly^2
///   d: A, B, poly   f = A poly^2 + B
///   e: A, B, poly   f = A (x - B) poly^2
struct FormMatch {
    Form form;
    Element A;
    std::optional<Element> B;
    std::optional<unsigned> e;
    std::optional<Poly> poly;

    /// Rebuilds f from the witness.
    Poly rebuild() const;
};

struct OrdinaryVerdict {
    bool ordinary = true;
    /// (A, B, e) with f = A (x - B)^(p^e) when not ordinary.
    std::optional<FormMatch> witness;
};

struct ClassificationReport {
    bool two_ordinary = true;
    std::vector<FormMatch> forms;
    OrdinaryVerdict ordinary;
};

/// Closed-form recognition of the exceptional forms. Throws DegreeTooSmall.
ClassificationReport classify_2_ordinary(const Poly& f);
OrdinaryVerdict classify_ordinary(const Poly& f);

std::optional<FormMatch> match_form_a(const Poly& f);
std::optional<FormMatch> match_form_b(const Poly& f);
std::optional<FormMatch> match_form_c(const Poly& f);
/// B-scan over nonzero B in code order; first match wins.
std::optional<FormMatch> match_form_d(const Poly& f);
std::optional<FormMatch> match_form_e(const Poly& f);

/// True when h = sum a_i x^i satisfies i(2i-1) B a_i = -2 (n+i-1)(n-i+1) a_{i-1}.
bool satisfies_even_recurrence(const Poly& h, const Element& B, unsigned n);
/// True when g satisfies i(2i-1) B a_i = -2 (n-i+1)(n+i) a_{i-1}.
bool satisfies_odd_recurrence(const Poly& g, const Element& B, unsigned n);

struct HnSequence {
    std::vector<Element> H;
    std::size_t first = 0;  ///< i
    std::size_t second = 0; ///< j > i with H_i == H_j
    bool repeated = false;
};

/// H_n = W_n / Z_n with Z_0 = A, W_0 = -B, Z_n = A Z_{n-1}^d, W_n = A W_{n-1}^d - B.
/// Stops at the first repeat or after max_n + 1 terms. Throws ZeroA.
HnSequence hn_sequence(const Element& A, const Element& B, std::uint64_t d, std::size_t max_n);

enum class Family { D, E };

struct FamilyParams {
    Family family;
    Element A;
    Element B;
    int sign = +1;  ///< branch of a_0 relative to the canonical square root
};

/// Family d: f = A h^2 + B, deg h = d/2. Family e: f = A (x - B) g^2,
/// deg g = (d-1)/2. Throws ParityMismatch, ZeroA, RecurrenceDivisorVanishes,
/// SqrtDoesNotExist.
Poly generate_family(const FamilyParams& params, unsigned d);
/// The h (family d) or g (family e) used by generate_family.
Poly family_core(const FamilyParams& params, unsigned d);

enum class OracleStatus { CertifiedNot, ConsistentUpTo };

struct OracleResult {
    OracleStatus status;
    /// Certificate level, or the depth reached.
    unsigned level;
};

/// Factors f^1..f^N incrementally (each factor g of f^{n-1} contributes the
/// factors of g(f)) and looks for a factor absent from f^0..f^{n-1}, with odd
/// multiplicity when `two` is set.
OracleResult oracle_2_ordinary(const Poly& f, unsigned depth, std::uint64_t seed = 0,
                               std::uint64_t degree_budget = fpoly::kDefaultDegreeBudget);
OracleResult oracle_ordinary(const Poly& f, unsigned depth, std::uint64_t seed = 0,
                             std::uint64_t degree_budget = fpoly::kDefaultDegreeBudget);

/// Largest N with d^N <= budget (at least 1).
unsigned default_oracle_depth(int degree, std::uint64_t degree_budget = fpoly::kDefaultDegreeBudget);

/// a f((x - b)/a) + b, i.e. phi o f o phi^{-1} for phi(x) = a x + b.
Poly conjugate(const Poly& f, const Element& a, const Element& b);

/// First (a, b) in code order with phi o f o phi^{-1} = g. Throws MixedFields,
/// DegreeMismatch.
std::optional<std::pair<Element, Element>> are_conjugate(const Poly& f, const Poly& g);

}  // namespace sqdyn::classify
