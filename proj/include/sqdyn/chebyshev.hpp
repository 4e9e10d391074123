#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "sqdyn/fpoly.hpp"

namespace sqdyn::classify {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial over Z, constant term first, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(BigInt c);
    static IntPoly x();

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    /// Decimal coefficients, comma separated, constant first.
    std::string to_string() const;

    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend bool operator==(const IntPoly& f, const IntPoly& g) = default;

private:
    void normalize();
    std::vector<BigInt> c_;
};

IntPoly compose(const IntPoly& f, const IntPoly& g);
/// Exact division by a monic divisor; throws InvalidArgument on a remainder.
IntPoly exact_div(const IntPoly& f, const IntPoly& monic_divisor);
/// Coefficients reduced into the prime subfield of `field`.
fpoly::Poly reduce(const IntPoly& f, const ff::FieldPtr& field);

/// T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
IntPoly chebyshev(unsigned d);
/// Monic normalization 2 T_d(x/2): T~_2 = x^2 - 2.
IntPoly tilde_chebyshev(unsigned d);
/// n-th cyclotomic polynomial by exact division of x^n - 1.
IntPoly cyclotomic(unsigned n);
/// psi_1 = x - 2, psi_2 = x + 2, and for n > 2 the polynomial with
/// Phi_n(x) = x^{phi(n)/2} psi_n(x + 1/x).
IntPoly psi(unsigned n);

}  // namespace sqdyn::classify
