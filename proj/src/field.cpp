#include "swkit/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "swkit/errors.hpp"

namespace swkit {

const char* to_string(PlaceKind k) { return k == PlaceKind::Inert ? "inert" : "split"; }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower factor_prime_power(long q) {
    if (q < 2) throw InputError("field order must be at least 2");
    long p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    long r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw InputError("not a prime power: " + std::to_string(q));
    return {static_cast<int>(p), e};
}

namespace {

// Remainder of poly modulo a monic divisor over F_p; both low to high.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        int lead = a.back() % p;
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const std::vector<int>& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool FiniteField::is_irreducible(int p, const std::vector<int>& poly) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || poly.back() != 1) return false;
    // Exhaustive trial division by every monic polynomial of degree <= deg/2.
    for (int dd = 1; dd <= deg / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> div(dd + 1, 0);
            long c = code;
            for (int i = 0; i < dd; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            div[dd] = 1;
            if (all_zero(poly_mod(poly, div, p))) return false;
        }
    }
    return true;
}

std::vector<int> FiniteField::default_modulus(int p, int e) {
    long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        std::vector<int> poly(e + 1, 0);
        long c = code;
        for (int i = 0; i < e; ++i) {
            poly[i] = static_cast<int>(c % p);
            c /= p;
        }
        poly[e] = 1;
        if (is_irreducible(p, poly)) return poly;
    }
    throw Error("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    if (e < 1 || e > kMaxDegree) throw GuardExceeded("extension degree " + std::to_string(e) + " outside 1..4");
    if (static_cast<int>(modulus_.size()) != e + 1) throw InputError("modulus has wrong degree");
    for (int& c : modulus_) c = ((c % p) + p) % p;
    if (!is_irreducible(p, modulus_)) throw InputError("modulus is not irreducible");

    size_ = 1;
    pow_p_.push_back(1);
    for (int i = 0; i < e; ++i) {
        size_ *= static_cast<std::uint32_t>(p);
        pow_p_.push_back(size_);
    }

    neg_.resize(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
        auto c = coeffs({a});
        for (int& x : c) x = (p - x) % p;
        neg_[a] = from_coeffs(c);
    }
    if (size_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(size_) * size_);
        for (std::uint32_t a = 0; a < size_; ++a) {
            auto ca = coeffs({a});
            for (std::uint32_t b = 0; b < size_; ++b) {
                auto cb = coeffs({b});
                std::uint32_t code = 0;
                for (int i = e - 1; i >= 0; --i) code = code * p + static_cast<std::uint32_t>((ca[i] + cb[i]) % p);
                add_table_[static_cast<std::size_t>(a) * size_ + b] = static_cast<std::uint16_t>(code);
            }
        }
    }

    // Discrete log tables from the first generator of the multiplicative group.
    exp_.assign(size_, FieldElem{0});
    log_.assign(size_, 0);
    const std::uint32_t order = size_ - 1;
    for (std::uint32_t g = 1; g < size_; ++g) {
        FieldElem x{1};
        std::uint32_t k = 0;
        bool generator = true;
        std::vector<char> seen(size_, 0);
        for (k = 0; k < order; ++k) {
            if (seen[x.code]) {
                generator = false;
                break;
            }
            seen[x.code] = 1;
            exp_[k] = x;
            log_[x.code] = k;
            x = mul_slow(x, {g});
        }
        if (generator) break;
    }
    if (order == 0) exp_[0] = {1};
}

std::shared_ptr<const FiniteField> FiniteField::get(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    if (e < 1 || e > kMaxDegree) throw GuardExceeded("extension degree " + std::to_string(e) + " outside 1..4");
    auto f = std::make_shared<const FiniteField>(p, e, default_modulus(p, e));
    cache.emplace(key, f);
    return f;
}

std::shared_ptr<const FiniteField> FiniteField::of_order(long q) {
    auto pp = factor_prime_power(q);
    return get(pp.p, pp.e);
}

FieldElem FiniteField::from_int(long v) const {
    long r = ((v % p_) + p_) % p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElem FiniteField::from_coeffs(const std::vector<int>& c) const {
    std::uint32_t code = 0;
    for (int i = e_ - 1; i >= 0; --i) {
        int d = i < static_cast<int>(c.size()) ? ((c[i] % p_) + p_) % p_ : 0;
        code = code * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(d);
    }
    return {code};
}

std::vector<int> FiniteField::coeffs(FieldElem x) const {
    std::vector<int> c(e_);
    std::uint32_t v = x.code;
    for (int i = 0; i < e_; ++i) {
        c[i] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
        v /= static_cast<std::uint32_t>(p_);
    }
    return c;
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
    if (!add_table_.empty()) return {add_table_[static_cast<std::size_t>(a.code) * size_ + b.code]};
    std::uint32_t code = 0;
    for (int i = e_ - 1; i >= 0; --i) {
        std::uint32_t da = (a.code / pow_p_[i]) % static_cast<std::uint32_t>(p_);
        std::uint32_t db = (b.code / pow_p_[i]) % static_cast<std::uint32_t>(p_);
        code = code * static_cast<std::uint32_t>(p_) + (da + db) % static_cast<std::uint32_t>(p_);
    }
    return {code};
}

FieldElem FiniteField::mul_slow(FieldElem a, FieldElem b) const {
    auto ca = coeffs(a);
    auto cb = coeffs(b);
    std::vector<int> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    return from_coeffs(poly_mod(prod, modulus_, p_));
}

FieldElem FiniteField::inv(FieldElem a) const {
    if (a.code == 0) throw InputError("inverse of zero");
    std::uint32_t l = log_[a.code];
    return exp_[l == 0 ? 0 : (size_ - 1) - l];
}

FieldElem FiniteField::pow(FieldElem a, std::uint64_t k) const {
    if (k == 0) return one();
    if (a.code == 0) return zero();
    std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (k % (size_ - 1))) % (size_ - 1);
    return exp_[static_cast<std::uint32_t>(l)];
}

FieldElem FiniteField::frobenius(FieldElem a, int k) const {
    std::uint64_t exp = 1;
    for (int i = 0; i < k; ++i) exp *= static_cast<std::uint64_t>(p_);
    return pow(a, exp);
}

}  // namespace swkit
