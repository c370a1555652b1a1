#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace swkit {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& v);
BigInt pow_big(const BigInt& base, unsigned long exp);

/// Exact rational number in lowest terms with positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    /// Integer power; negative exponents invert.
    Rational pow(long exp) const;

    std::string to_string() const;
    double to_double() const { return value_.get_d(); }
    const mpq_class& raw() const { return value_; }

  private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace swkit
