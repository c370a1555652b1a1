#include "swkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "swkit/errors.hpp"

namespace swkit {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
    std::vector<BigInt> v(power + 1);
    v[power] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::scaled(const BigInt& c) const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.normalize();
    return r;
}

IntPoly IntPoly::substitute_power(long k) const {
    if (k < 1) throw InputError("substitute_power needs k >= 1");
    if (is_zero()) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(degree() * k + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return IntPoly(std::move(out));
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

BigInt IntPoly::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

std::vector<std::string> IntPoly::decimal_coeffs() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_decimal(c));
    return out;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << "T";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly reverse_with_sign(const IntPoly& p, long ell, int eta) {
    if (eta != 1 && eta != -1) throw InputError("eta must be +1 or -1");
    if (ell < 0) throw InputError("negative length");
    if (p.degree() > ell) throw DegreeExceedsLength("degree exceeds reversal length");
    const bool flip = eta == -1 && (ell % 2 != 0);
    std::vector<BigInt> out(static_cast<std::size_t>(ell + 1));
    for (long i = 0; i <= ell; ++i) {
        BigInt c = p.coeff(static_cast<std::size_t>(ell - i));
        out[static_cast<std::size_t>(i)] = flip ? BigInt(-c) : c;
    }
    return IntPoly(std::move(out));
}

BigInt central_derivative(const IntPoly& p, long d, long r) {
    if (r < 0) throw InputError("negative derivative order");
    if (p.degree() > d) throw DegreeExceedsLength("degree exceeds d in central derivative");
    BigInt total = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        BigInt base = d - 2 * static_cast<long>(i);
        BigInt term;
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(r));
        total += p.coeffs()[i] * term;
    }
    return total;
}

}  // namespace swkit
