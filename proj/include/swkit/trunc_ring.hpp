#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "swkit/field.hpp"

namespace swkit {

/// Element of k[t]/(t^N): coefficient of t^i at index i.
struct TruncElem {
    std::vector<FieldElem> c;
    bool operator==(const TruncElem&) const = default;
};

/// k[t]/(t^N) over a finite field k; t plays the role of the uniformizer.
class TruncRing {
  public:
    TruncRing(FieldPtr field, int n);

    const FiniteField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int truncation() const { return n_; }
    std::uint64_t cardinality() const;

    TruncElem zero() const;
    TruncElem one() const;
    TruncElem uniformizer() const;
    TruncElem constant(FieldElem a) const;
    TruncElem from_ints(const std::vector<long>& coeffs) const;

    TruncElem add(const TruncElem& x, const TruncElem& y) const;
    TruncElem sub(const TruncElem& x, const TruncElem& y) const;
    TruncElem neg(const TruncElem& x) const;
    TruncElem mul(const TruncElem& x, const TruncElem& y) const;
    TruncElem scale(FieldElem a, const TruncElem& x) const;

    /// t-adic valuation; N for the zero element.
    int valuation(const TruncElem& x) const;
    bool is_unit(const TruncElem& x) const { return valuation(x) == 0; }
    bool same_ring(const TruncRing& o) const { return n_ == o.n_ && *field_ == *o.field_; }

    /// Canonical index in [0, |ring|) (mixed radix over the coefficients).
    std::uint64_t encode(const TruncElem& x) const;
    TruncElem decode(std::uint64_t code) const;

    /// Visits every element once; guarded by the ring-element limit.
    void for_each(const std::function<void(const TruncElem&)>& fn) const;
    std::vector<TruncElem> elements() const;
    TruncElem random(std::mt19937_64& rng) const;

  private:
    void check(const TruncElem& x) const;

    FieldPtr field_;
    int n_;
};

/// Extension element: inert places use `first` only, split places are the
/// ordered pair (first, second).
struct ExtElem {
    TruncElem first;
    TruncElem second;
    bool operator==(const ExtElem&) const = default;
};

/// O'/t^N with its involution sigma, for an unramified place of residue
/// field F_q. Inert: F_{q^2}[t]/(t^N) with sigma the q-power Frobenius on
/// coefficients. Split: (F_q[t]/(t^N))^2 with sigma swapping the factors.
class ExtRing {
  public:
    ExtRing(PlaceKind kind, long q, int n);

    PlaceKind kind() const { return kind_; }
    long q() const { return q_; }
    int truncation() const { return base_.truncation(); }
    const TruncRing& base() const { return base_; }
    /// Coefficient ring of a single inert coordinate, F_{q^2}[t]/(t^N).
    const TruncRing& inert_ring() const { return ext_; }
    std::uint64_t cardinality() const;

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem add(const ExtElem& x, const ExtElem& y) const;
    ExtElem neg(const ExtElem& x) const;
    ExtElem mul(const ExtElem& x, const ExtElem& y) const;
    ExtElem sigma(const ExtElem& x) const;
    /// x * sigma(x), returned as an element of the fixed ring O/t^N.
    TruncElem norm(const ExtElem& x) const;
    /// Inclusion of the fixed ring O/t^N.
    ExtElem embed(const TruncElem& a) const;
    /// Inverse of embed on sigma-fixed elements; throws otherwise.
    TruncElem restrict_fixed(const ExtElem& x) const;
    bool is_fixed(const ExtElem& x) const { return sigma(x) == x; }

    void for_each(const std::function<void(const ExtElem&)>& fn) const;
    ExtElem random(std::mt19937_64& rng) const;

    /// Field-level embedding F_q -> F_{q^2} used for inert places.
    FieldElem embed_scalar(FieldElem a) const;
    FieldElem sigma_scalar(FieldElem a) const;

  private:
    PlaceKind kind_;
    long q_;
    TruncRing base_;
    TruncRing ext_;
    std::vector<FieldElem> embed_;       // F_q -> F_{q^2}
    std::vector<std::int64_t> restrict_;  // F_{q^2} -> F_q or -1
    std::vector<FieldElem> sigma_;       // Frobenius of F_{q^2} over F_q
};

}  // namespace swkit
