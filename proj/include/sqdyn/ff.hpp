#pragma once

// Arithmetic in F_{p^k} for odd primes p.
//
// Elements are stored as integer codes: the coordinate vector (c_0, ..., c_{k-1})
// with respect to the power basis 1, t, ..., t^{k-1} of F_p[t]/(modulus) is packed
// as code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Integers 0..p-1 therefore keep
// their value, and the numeric order of codes is the lexicographic order of the
// coordinate vector read from the highest power down. Enumeration, canonical
// square roots and every tie-break in the library use this order.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqdyn/error.hpp"

namespace sqdyn::ff {

using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete model of F_q, q = p^k. Immutable after construction; share it
/// freely across threads.
class Field {
    struct Passkey {};

public:
    /// Builds F_{p^k}. Without a modulus the lexicographically smallest monic
    /// irreducible of degree k is used, comparing coefficient tuples
    /// (c_0, ..., c_{k-1}) with c_0 as the most significant key.
    static FieldPtr make(std::uint32_t p, unsigned k = 1,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Accepts "p", "p^k" or "p^k/(c_0,...,c_{k-1},1)".
    static FieldPtr parse(std::string_view text);

    Field(Passkey, std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, constant term first (length k + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// "p^k" for prime fields, "p^k/(c_0,...,1)" otherwise.
    std::string to_string() const;

    /// Same p, k and modulus.
    bool same_as(const Field& other) const noexcept;

    // Code-level kernels. Inputs must be valid codes (< q); no checks are made.
    Code add(Code a, Code b) const noexcept;
    Code sub(Code a, Code b) const noexcept;
    Code neg(Code a) const noexcept;
    Code mul(Code a, Code b) const noexcept;
    /// Throws DivisionByZero for a == 0.
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, std::uint64_t e) const noexcept;
    /// Quadratic character: 0, +1 or -1.
    int chi(Code a) const noexcept;
    /// Canonical square root (the smaller of the two codes), or nullopt.
    std::optional<Code> sqrt(Code a) const;
    /// Reduces a signed integer into the prime subfield.
    Code from_int(std::int64_t value) const noexcept;
    /// The p-th root (inverse Frobenius).
    Code frobenius_inverse(Code a) const noexcept;

    std::vector<std::uint32_t> coords(Code a) const;
    Code from_coords(std::span<const std::uint32_t> coords) const;

    /// Smallest code generating the multiplicative group.
    Code primitive_element() const noexcept { return generator_; }

private:
    void mul_coords(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const noexcept;
    Code slow_mul(Code a, Code b) const noexcept;
    Code slow_add(Code a, Code b, bool subtract) const noexcept;
    Code slow_pow(Code a, std::uint64_t e) const noexcept;
    void build_tables();

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;

    Code generator_ = 0;
    // exp_ has length 2(q-1) so exponent sums need no reduction.
    std::vector<Code> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::int8_t> chi_table_;
    Code nonresidue_ = 0;
};

/// Value-type field element. Binary operations on elements of different fields
/// throw MixedFields.
class Element {
public:
    Element(FieldPtr field, Code code);

    const FieldPtr& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    std::vector<std::uint32_t> coords() const { return field_->coords(code_); }
    std::string to_string() const { return std::to_string(code_); }

    Element operator-() const { return {field_, field_->neg(code_)}; }
    Element inverse() const { return {field_, field_->inv(code_)}; }

    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    friend Element operator*(const Element& x, const Element& y);
    friend Element operator/(const Element& x, const Element& y);

    /// Equal iff same field and same canonical coordinates.
    friend bool operator==(const Element& x, const Element& y) noexcept;
    /// Enumeration order; only meaningful within one field.
    friend std::strong_ordering operator<=>(const Element& x, const Element& y) noexcept {
        return x.code_ <=> y.code_;
    }

private:
    FieldPtr field_;
    Code code_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
void require_same_field(const FieldPtr& a, const FieldPtr& b);

enum class ArithOp { Add, Sub, Mul, Div };
Element arith(const Element& x, const Element& y, ArithOp op);

/// 0^0 = 1.
Element pow(const Element& x, std::uint64_t e);
int quadratic_character(const Element& x);
/// Canonical root: the one with the smaller code. Throws NonSquare.
Element square_root(const Element& x);
/// All q elements in code order.
std::vector<Element> enumerate_elements(const FieldPtr& field);

Element element(const FieldPtr& field, std::int64_t integer);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace sqdyn::ff
