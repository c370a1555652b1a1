#include "swkit/trunc_ring.hpp"

#include "swkit/errors.hpp"
#include "swkit/guards.hpp"

#include <utility>

namespace swkit {

TruncRing::TruncRing(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
    if (!field_) throw InputError("null field");
    if (n < 1) throw InputError("truncation level must be at least 1");
}

std::uint64_t TruncRing::cardinality() const {
    std::uint64_t out = 1;
    for (int i = 0; i < n_; ++i) {
        if (out > (UINT64_MAX / field_->size())) throw GuardExceeded("ring cardinality overflows 64 bits");
        out *= field_->size();
    }
    return out;
}

void TruncRing::check(const TruncElem& x) const {
    if (static_cast<int>(x.c.size()) != n_) throw RingMismatch("element has " + std::to_string(x.c.size()) + " coefficients, ring has N=" + std::to_string(n_));
    for (auto a : x.c)
        if (a.code >= field_->size()) throw RingMismatch("coefficient outside the residue field");
}

TruncElem TruncRing::zero() const { return {std::vector<FieldElem>(n_, field_->zero())}; }

TruncElem TruncRing::one() const { return constant(field_->one()); }

TruncElem TruncRing::uniformizer() const {
    auto x = zero();
    if (n_ > 1) x.c[1] = field_->one();
    return x;
}

TruncElem TruncRing::constant(FieldElem a) const {
    auto x = zero();
    x.c[0] = a;
    return x;
}

TruncElem TruncRing::from_ints(const std::vector<long>& coeffs) const {
    auto x = zero();
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) < n_; ++i) x.c[i] = field_->from_int(coeffs[i]);
    return x;
}

TruncElem TruncRing::add(const TruncElem& x, const TruncElem& y) const {
    check(x);
    check(y);
    TruncElem out = x;
    for (int i = 0; i < n_; ++i) out.c[i] = field_->add(x.c[i], y.c[i]);
    return out;
}

TruncElem TruncRing::neg(const TruncElem& x) const {
    check(x);
    TruncElem out = x;
    for (auto& a : out.c) a = field_->neg(a);
    return out;
}

TruncElem TruncRing::sub(const TruncElem& x, const TruncElem& y) const { return add(x, neg(y)); }

TruncElem TruncRing::mul(const TruncElem& x, const TruncElem& y) const {
    check(x);
    check(y);
    auto out = zero();
    for (int i = 0; i < n_; ++i) {
        if (x.c[i].code == 0) continue;
        for (int j = 0; i + j < n_; ++j) out.c[i + j] = field_->add(out.c[i + j], field_->mul(x.c[i], y.c[j]));
    }
    return out;
}

TruncElem TruncRing::scale(FieldElem a, const TruncElem& x) const {
    check(x);
    TruncElem out = x;
    for (auto& c : out.c) c = field_->mul(a, c);
    return out;
}

int TruncRing::valuation(const TruncElem& x) const {
    check(x);
    for (int i = 0; i < n_; ++i)
        if (x.c[i].code != 0) return i;
    return n_;
}

std::uint64_t TruncRing::encode(const TruncElem& x) const {
    check(x);
    std::uint64_t code = 0;
    for (int i = n_ - 1; i >= 0; --i) code = code * field_->size() + x.c[i].code;
    return code;
}

TruncElem TruncRing::decode(std::uint64_t code) const {
    auto x = zero();
    for (int i = 0; i < n_; ++i) {
        x.c[i] = {static_cast<std::uint32_t>(code % field_->size())};
        code /= field_->size();
    }
    return x;
}

void TruncRing::for_each(const std::function<void(const TruncElem&)>& fn) const {
    const auto total = cardinality();
    if (total > scaled_guard(GuardDefaults::kRingElements)) throw GuardExceeded("ring has " + std::to_string(total) + " elements");
    for (std::uint64_t code = 0; code < total; ++code) fn(decode(code));
}

std::vector<TruncElem> TruncRing::elements() const {
    std::vector<TruncElem> out;
    for_each([&](const TruncElem& x) { out.push_back(x); });
    return out;
}

TruncElem TruncRing::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, field_->size() - 1);
    auto x = zero();
    for (auto& c : x.c) c = {dist(rng)};
    return x;
}

namespace {

FieldPtr base_field(long q) {
    auto pp = factor_prime_power(q);
    if (pp.p == 2) throw InputError("Hermitian data require odd q");
    return FiniteField::get(pp.p, pp.e);
}

FieldPtr quadratic_field(long q) {
    auto pp = factor_prime_power(q);
    return FiniteField::get(pp.p, 2 * pp.e);
}

}  // namespace

ExtRing::ExtRing(PlaceKind kind, long q, int n)
    : kind_(kind), q_(q), base_(base_field(q), n), ext_(kind == PlaceKind::Inert ? quadratic_field(q) : base_field(q), n) {
    if (kind_ != PlaceKind::Inert) return;
    const auto& fq = base_.field();
    const auto& fq2 = ext_.field();
    // A root of the modulus of F_q inside F_{q^2} fixes the embedding.
    const auto& mod = fq.modulus();
    FieldElem root{0};
    bool found = false;
    for (std::uint32_t c = 0; c < fq2.size() && !found; ++c) {
        FieldElem r{c};
        FieldElem acc = fq2.zero();
        for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) acc = fq2.add(fq2.mul(acc, r), fq2.from_int(mod[i]));
        if (acc.code == 0) {
            root = r;
            found = true;
        }
    }
    if (!found) throw Error("no embedding of F_q into F_{q^2}");
    embed_.resize(fq.size());
    restrict_.assign(fq2.size(), -1);
    for (std::uint32_t a = 0; a < fq.size(); ++a) {
        auto c = fq.coeffs({a});
        FieldElem acc = fq2.zero();
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = fq2.add(fq2.mul(acc, root), fq2.from_int(c[i]));
        embed_[a] = acc;
        restrict_[acc.code] = a;
    }
    sigma_.resize(fq2.size());
    for (std::uint32_t a = 0; a < fq2.size(); ++a) sigma_[a] = fq2.frobenius({a}, fq.degree());
}

std::uint64_t ExtRing::cardinality() const {
    if (kind_ == PlaceKind::Inert) return ext_.cardinality();
    const auto b = base_.cardinality();
    if (b > UINT32_MAX) throw GuardExceeded("ring cardinality overflows 64 bits");
    return b * b;
}

ExtElem ExtRing::zero() const {
    if (kind_ == PlaceKind::Inert) return {ext_.zero(), {}};
    return {base_.zero(), base_.zero()};
}

ExtElem ExtRing::one() const {
    if (kind_ == PlaceKind::Inert) return {ext_.one(), {}};
    return {base_.one(), base_.one()};
}

ExtElem ExtRing::add(const ExtElem& x, const ExtElem& y) const {
    if (kind_ == PlaceKind::Inert) return {ext_.add(x.first, y.first), {}};
    return {base_.add(x.first, y.first), base_.add(x.second, y.second)};
}

ExtElem ExtRing::neg(const ExtElem& x) const {
    if (kind_ == PlaceKind::Inert) return {ext_.neg(x.first), {}};
    return {base_.neg(x.first), base_.neg(x.second)};
}

ExtElem ExtRing::mul(const ExtElem& x, const ExtElem& y) const {
    if (kind_ == PlaceKind::Inert) return {ext_.mul(x.first, y.first), {}};
    return {base_.mul(x.first, y.first), base_.mul(x.second, y.second)};
}

ExtElem ExtRing::sigma(const ExtElem& x) const {
    if (kind_ == PlaceKind::Split) return {x.second, x.first};
    ExtElem out = x;
    for (auto& c : out.first.c) c = sigma_[c.code];
    return out;
}

TruncElem ExtRing::norm(const ExtElem& x) const { return restrict_fixed(mul(x, sigma(x))); }

ExtElem ExtRing::embed(const TruncElem& a) const {
    if (kind_ == PlaceKind::Split) return {a, a};
    auto out = ext_.zero();
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = embed_[a.c[i].code];
    return {out, {}};
}

TruncElem ExtRing::restrict_fixed(const ExtElem& x) const {
    if (kind_ == PlaceKind::Split) {
        if (!(x.first == x.second)) throw InputError("element is not fixed by sigma");
        return x.first;
    }
    auto out = base_.zero();
    for (std::size_t i = 0; i < x.first.c.size(); ++i) {
        auto r = restrict_[x.first.c[i].code];
        if (r < 0) throw InputError("element is not fixed by sigma");
        out.c[i] = {static_cast<std::uint32_t>(r)};
    }
    return out;
}

FieldElem ExtRing::embed_scalar(FieldElem a) const { return kind_ == PlaceKind::Inert ? embed_[a.code] : a; }

FieldElem ExtRing::sigma_scalar(FieldElem a) const { return kind_ == PlaceKind::Inert ? sigma_[a.code] : a; }

void ExtRing::for_each(const std::function<void(const ExtElem&)>& fn) const {
    const auto total = cardinality();
    if (total > scaled_guard(GuardDefaults::kRingElements)) throw GuardExceeded("ring has " + std::to_string(total) + " elements");
    if (kind_ == PlaceKind::Inert) {
        ext_.for_each([&](const TruncElem& x) { fn({x, {}}); });
        return;
    }
    const auto b = base_.cardinality();
    for (std::uint64_t i = 0; i < b; ++i) {
        auto x = base_.decode(i);
        for (std::uint64_t j = 0; j < b; ++j) fn({x, base_.decode(j)});
    }
}

ExtElem ExtRing::random(std::mt19937_64& rng) const {
    if (kind_ == PlaceKind::Inert) return {ext_.random(rng), {}};
    auto a = base_.random(rng);
    return {a, base_.random(rng)};
}

}  // namespace swkit
