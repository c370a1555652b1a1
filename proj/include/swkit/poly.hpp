#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "swkit/rational.hpp"

namespace swkit {

/// Dense univariate polynomial in T over arbitrary-precision integers.
///
/// coeffs()[i] is the coefficient of T^i. Trailing zeros are always stripped,
/// so the zero polynomial is the empty coefficient list and degree() == -1
/// stands for degree minus infinity.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, std::size_t power);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of T^i; zero beyond the degree.
    BigInt coeff(std::size_t i) const;
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    IntPoly operator-() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    IntPoly scaled(const BigInt& c) const;

    /// p(T^k).
    IntPoly substitute_power(long k) const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    /// Sum of coefficients, i.e. p(1).
    BigInt coefficient_sum() const;

    std::vector<std::string> decimal_coeffs() const;
    std::string to_string() const;

  private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// (eta*T)^ell * p(1/T); coefficient i is eta^ell times coefficient ell-i of p.
IntPoly reverse_with_sign(const IntPoly& p, long ell, int eta);

/// Sum_i c_i (d - 2i)^r: the r-th derivative at s = 0 of q^{ds} p(q^{-2s}),
/// divided by (log q)^r.
BigInt central_derivative(const IntPoly& p, long d, long r);

}  // namespace swkit
