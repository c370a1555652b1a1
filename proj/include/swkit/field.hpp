#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace swkit {

enum class PlaceKind { Inert, Split };

/// eta(uniformizer): -1 at inert places, +1 at split places.
inline int eta(PlaceKind k) { return k == PlaceKind::Inert ? -1 : 1; }
const char* to_string(PlaceKind k);

/// Decomposes q = p^e; throws InputError when q is not a prime power.
struct PrimePower {
    int p = 0;
    int e = 0;
};
PrimePower factor_prime_power(long q);
bool is_prime(long n);

/// Element of a finite field, encoded as the integer sum c_i p^i of its
/// coefficients over the polynomial basis 1, x, ..., x^{e-1}.
struct FieldElem {
    std::uint32_t code = 0;
    auto operator<=>(const FieldElem&) const = default;
};

/// F_{p^e} = F_p[x]/(modulus). Arithmetic is table driven; instances are
/// immutable and shared.
class FiniteField {
  public:
    static constexpr int kMaxDegree = 4;

    /// Field with the default modulus: the smallest monic irreducible of
    /// degree e, ordered by integer encoding of its lower coefficients.
    static std::shared_ptr<const FiniteField> get(int p, int e);
    static std::shared_ptr<const FiniteField> of_order(long q);

    /// modulus holds e+1 coefficients, low to high, leading coefficient 1.
    FiniteField(int p, int e, std::vector<int> modulus);

    static bool is_irreducible(int p, const std::vector<int>& poly);
    static std::vector<int> default_modulus(int p, int e);

    int characteristic() const { return p_; }
    int degree() const { return e_; }
    std::uint32_t size() const { return size_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem from_int(long v) const;
    FieldElem from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs(FieldElem x) const;
    FieldElem primitive() const { return exp_[1]; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const { return neg_[a.code]; }
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.code == 0 || b.code == 0) return {0};
        std::uint32_t s = log_[a.code] + log_[b.code];
        if (s >= size_ - 1) s -= size_ - 1;
        return exp_[s];
    }
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, std::uint64_t k) const;
    /// x -> x^{p^k}.
    FieldElem frobenius(FieldElem a, int k = 1) const;

    bool operator==(const FiniteField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

  private:
    FieldElem mul_slow(FieldElem a, FieldElem b) const;

    int p_;
    int e_;
    std::uint32_t size_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> pow_p_;
    std::vector<FieldElem> neg_;
    std::vector<FieldElem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace swkit
