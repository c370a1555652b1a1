#include "swkit/rational.hpp"

#include "swkit/errors.hpp"

namespace swkit {

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::pow(long exp) const {
    if (exp < 0) return (Rational(1) / *this).pow(-exp);
    BigInt num = pow_big(value_.get_num(), static_cast<unsigned long>(exp));
    BigInt den = pow_big(value_.get_den(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return to_decimal(numerator());
    return to_decimal(numerator()) + "/" + to_decimal(denominator());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace swkit
