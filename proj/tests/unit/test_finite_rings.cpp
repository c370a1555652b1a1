#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "swkit/errors.hpp"
#include "swkit/field.hpp"
#include "swkit/trunc_ring.hpp"

using namespace swkit;

namespace {

bool has_root(int p, const std::vector<int>& poly) {
    for (int x = 0; x < p; ++x) {
        long acc = 0;
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) acc = (acc * x + poly[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// Schoolbook product modulo the field's modulus.
std::vector<int> poly_mul_mod(const FiniteField& f, const std::vector<int>& a, const std::vector<int>& b) {
    const int p = f.characteristic(), e = f.degree();
    const auto& mod = f.modulus();
    std::vector<int> prod(2 * e, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int k = 2 * e - 1; k >= e; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        for (int i = 0; i <= e; ++i) prod[k - e + i] = ((prod[k - e + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(e);
    return prod;
}

}  // namespace

TEST_SUITE("finite-rings") {

TEST_CASE("prime powers") {
    CHECK(factor_prime_power(9).p == 3);
    CHECK(factor_prime_power(9).e == 2);
    CHECK(factor_prime_power(5).e == 1);
    CHECK_THROWS_AS(factor_prime_power(6), InputError);
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("default moduli") {
    CHECK(FiniteField::get(3, 2)->modulus() == std::vector<int>{1, 0, 1});
    CHECK(FiniteField::get(5, 2)->modulus() == std::vector<int>{2, 0, 1});
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 2}, {7, 2}, {3, 3}, {3, 4}}) {
        const auto& mod = FiniteField::get(p, e)->modulus();
        CHECK(mod == FiniteField::default_modulus(p, e));
        CHECK(FiniteField::is_irreducible(p, mod));
        if (e <= 3) CHECK_FALSE(has_root(p, mod));
    }
    CHECK_FALSE(FiniteField::is_irreducible(3, {2, 0, 1}));
}

TEST_CASE("field axioms") {
    std::mt19937_64 rng(3);
    for (long q : {2L, 3L, 4L, 5L, 9L, 25L, 27L, 81L}) {
        auto f = FiniteField::of_order(q);
        CHECK(f->size() == q);
        std::uniform_int_distribution<std::uint32_t> pick(0, f->size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            FieldElem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->coeffs(f->mul(a, b)) == poly_mul_mod(*f, f->coeffs(a), f->coeffs(b)));
            CHECK(f->add(a, f->neg(a)) == f->zero());
            if (a.code != 0) CHECK(f->mul(a, f->inv(a)) == f->one());
            CHECK(f->pow(a, q) == a);
            CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
        }
        std::set<std::uint32_t> powers;
        FieldElem g = f->primitive(), x = f->one();
        for (std::uint32_t k = 0; k + 1 < f->size(); ++k) {
            powers.insert(x.code);
            x = f->mul(x, g);
        }
        CHECK(powers.size() == f->size() - 1);
    }
}

TEST_CASE("truncated ring") {
    TruncRing r(FiniteField::of_order(3), 2);
    CHECK(r.elements().size() == 9);
    const auto t = r.uniformizer();
    CHECK(r.valuation(t) == 1);
    CHECK(r.mul(t, t) == r.zero());
    CHECK(r.valuation(r.zero()) == 2);
    CHECK(r.is_unit(r.one()));
    std::size_t units = 0;
    r.for_each([&](const TruncElem& x) { units += r.is_unit(x) ? 1 : 0; });
    CHECK(units == 6);
}

TEST_CASE("extension ring counts") {
    CHECK(TruncRing(FiniteField::of_order(9), 2).elements().size() == 81);
    std::size_t inert = 0, split = 0, fixed = 0;
    ExtRing ri(PlaceKind::Inert, 3, 1), rs(PlaceKind::Split, 3, 1);
    ri.for_each([&](const ExtElem& x) {
        ++inert;
        fixed += ri.is_fixed(x) ? 1 : 0;
    });
    rs.for_each([&](const ExtElem&) { ++split; });
    CHECK(inert == 9);
    CHECK(split == 9);
    CHECK(fixed == 3);
}

TEST_CASE("involution and norm") {
    std::mt19937_64 rng(5);
    for (PlaceKind kind : {PlaceKind::Inert, PlaceKind::Split}) {
        for (long q : {3L, 5L, 9L}) {
            ExtRing r(kind, q, 3);
            for (int trial = 0; trial < 100; ++trial) {
                ExtElem a = r.random(rng), b = r.random(rng);
                CHECK(r.sigma(r.sigma(a)) == a);
                CHECK(r.sigma(r.mul(a, b)) == r.mul(r.sigma(a), r.sigma(b)));
                CHECK(r.sigma(r.add(a, b)) == r.add(r.sigma(a), r.sigma(b)));
                CHECK(r.embed(r.norm(a)) == r.mul(a, r.sigma(a)));
                CHECK(r.base().mul(r.norm(a), r.norm(b)) == r.norm(r.mul(a, b)));
            }
        }
    }
}

TEST_CASE("norm fibers") {
    for (PlaceKind kind : {PlaceKind::Inert, PlaceKind::Split}) {
        ExtRing r(kind, 3, 1);
        std::map<std::uint32_t, int> fiber;
        r.for_each([&](const ExtElem& x) { ++fiber[r.norm(x).c[0].code]; });
        REQUIRE(fiber.size() == 3);
        for (const auto& [value, count] : fiber) {
            if (value == 0) CHECK(count == (kind == PlaceKind::Inert ? 1 : 5));
            else CHECK(count == (kind == PlaceKind::Inert ? 4 : 2));
        }
    }
}

TEST_CASE("even characteristic rejected for the extension") {
    CHECK_THROWS_AS(ExtRing(PlaceKind::Inert, 4, 1), InputError);
    CHECK_THROWS_AS(ExtRing(PlaceKind::Split, 2, 1), InputError);
}

}
