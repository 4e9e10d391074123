#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sqdyn/fpoly.hpp"

namespace sqdyn::dynamics {

using ff::Element;
using fpoly::Poly;

/// Orbit of `start`: elements[0..tail) is the tail, elements[tail..) the cycle,
/// and f(elements.back()) == elements[tail].
struct OrbitSummary {
    Element start;
    std::size_t tail = 0;
    std::size_t period = 1;
    std::vector<Element> elements;
    std::optional<std::size_t> contains_zero_at;

    std::size_t size() const noexcept { return elements.size(); }
    /// f^l(start) for any l >= 0.
    const Element& at(std::size_t l) const;
};

OrbitSummary forward_orbit(const Poly& f, const Element& a);

/// chi(f^l(a)) indexed from l = 0. The stored prefix covers one orbit lap;
/// at() extends it through the cycle.
struct SignSequence {
    std::vector<int> signs;
    std::size_t orbit_tail = 0;
    std::size_t orbit_period = 1;
    std::size_t sign_tail = 0;
    std::size_t sign_period = 1;
    bool purely_periodic = true;

    int at(std::size_t l) const noexcept;
};

SignSequence sign_sequence(const OrbitSummary& orbit);
SignSequence sign_sequence(const Poly& f, const Element& a);

struct RunResult {
    std::size_t length = 0;
    /// The whole cycle carries the target sign; length then counts the
    /// distinct elements of the run (trailing tail part plus the cycle).
    bool cycle_constant = false;
};

/// Longest block of consecutive iterates with chi == target (+1 or -1).
RunResult longest_run(const SignSequence& s, int target);
RunResult longest_run(const Poly& f, const Element& a, int target);

struct ExtensionPoints {
    unsigned degree;
    ff::FieldPtr field;
    std::vector<Element> points;
};

/// R_{n,alpha}: roots of f^n - alpha.
struct PreimageLevel {
    unsigned level = 0;
    Element alpha;
    std::vector<Element> points;
    /// Roots generating F_{q^e}, 1 < e <= max_ext, grouped by e.
    std::vector<ExtensionPoints> extension_points;
    /// Irreducible factors of degree above max_ext: degree -> count.
    std::map<unsigned, std::size_t> uncounted_factors;
    /// Sum of degree * multiplicity over all factors (equals d^n).
    std::uint64_t total_degree = 0;
};

PreimageLevel preimages(const Poly& f, const Element& alpha, unsigned n, unsigned max_ext = 1,
                        std::uint64_t degree_budget = fpoly::kDefaultDegreeBudget);

struct TreeRepetition {
    bool repeating = false;
    std::optional<Element> beta;  ///< lives in F_{q^max_ext}
    unsigned n = 0;
    unsigned m = 0;
};

/// Builds the preimage tree of alpha inside F_{q^max_ext} down to `depth` and
/// reports the first pair of levels n < m (ordered by m, then n) sharing a point.
TreeRepetition tree_is_repeating(const Poly& f, const Element& alpha, unsigned depth, unsigned max_ext = 1,
                                 std::uint64_t degree_budget = fpoly::kDefaultDegreeBudget);

}  // namespace sqdyn::dynamics
