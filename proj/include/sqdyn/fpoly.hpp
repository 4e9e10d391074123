#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqdyn/ff.hpp"

namespace sqdyn::fpoly {

using ff::Code;
using ff::Element;
using ff::FieldPtr;

inline constexpr std::uint64_t kDefaultDegreeBudget = 4096;

/// Dense univariate polynomial over a finite field, constant term first and no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Code> coeffs);

    static Poly constant(const Element& c);
    static Poly x(const FieldPtr& field);
    static Poly monomial(const Element& c, std::size_t degree);
    /// x - root
    static Poly linear(const Element& root);
    /// Comma-separated coefficient codes, constant first: "1,0,1" is x^2 + 1.
    static Poly parse(const FieldPtr& field, std::string_view text);

    const FieldPtr& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    std::span<const Code> codes() const noexcept { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    Element coeff(std::size_t i) const;
    Code coeff_code(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    /// Leading coefficient; zero for the zero polynomial.
    Element leading() const;

    Poly monic() const;
    Poly scaled(Code c) const;
    Poly operator-() const;

    /// Horner evaluation on codes.
    Code eval(Code a) const noexcept;

    std::string to_string() const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend bool operator==(const Poly& f, const Poly& g) noexcept;

    /// Total order used for deterministic output: degree, then coefficient
    /// codes from the constant term up.
    friend bool canonical_less(const Poly& f, const Poly& g) noexcept;

private:
    void normalize() noexcept;

    FieldPtr field_;
    std::vector<Code> c_;
};

enum class PolyOp { Add, Sub, Mul };
Poly poly_arith(const Poly& f, const Poly& g, PolyOp op);

/// (quotient, remainder); throws DivisionByZero for g == 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);

/// f(g(x)).
Poly compose(const Poly& f, const Poly& g);
/// n-fold self composition; iterate(f, 0) = x. Throws DegreeBudgetExceeded
/// when deg(f)^n exceeds the budget.
Poly iterate(const Poly& f, unsigned n, std::uint64_t degree_budget = kDefaultDegreeBudget);
Poly derivative(const Poly& f);
/// Monic gcd; throws BothZero.
Poly gcd(const Poly& f, const Poly& g);
Element evaluate(const Poly& f, const Element& a);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly base, std::uint64_t e, const Poly& m);
/// f(x)^(1/p) for f with only exponents divisible by p.
Poly pth_root(const Poly& f);

/// Values of f at every code 0..q-1.
std::vector<Code> value_table(const Poly& f);

/// deg^n with saturation, used by every degree-budget check.
std::uint64_t saturating_power(std::uint64_t base, unsigned n) noexcept;
void check_degree_budget(int degree, unsigned n, std::uint64_t budget);

struct Factor {
    Poly poly;
    unsigned multiplicity;
};

struct Factorization {
    Element unit;
    /// Monic irreducibles ordered by degree then coefficient codes.
    std::vector<Factor> factors;

    Poly expand() const;
};

/// Complete factorization: squarefree split, distinct-degree split, then
/// Cantor-Zassenhaus equal-degree splitting driven by a generator seeded with
/// `seed`. Throws ConstantInput for degree < 1.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

/// Monic squarefree parts s_i with f = lc * prod s_i^i, sorted by i.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

struct SquareWitness {
    Element c;
    Poly h;  ///< monic
    /// True when c is itself a square, i.e. f is a perfect square in F_q[x].
    bool c_is_square;
};

/// f = c * h^2 with h monic, present iff every irreducible factor of f has even
/// multiplicity.
std::optional<SquareWitness> constant_times_square(const Poly& f);

/// F_{q^e} built as a fresh F_{p^{ke}} together with an embedding of F_q.
struct FieldExtension {
    FieldPtr base;
    FieldPtr field;
    unsigned degree;
    /// image[c] is the code in `field` of the base element with code c.
    std::vector<Code> image;

    Element map(const Element& x) const;
    Poly map(const Poly& f) const;
};

FieldExtension extend(const FieldPtr& base, unsigned degree);

/// Distinct roots of f in its own field, in code order.
std::vector<Element> roots(const Poly& f, std::uint64_t seed = 0);

}  // namespace sqdyn::fpoly
