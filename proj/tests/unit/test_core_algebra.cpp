#include <cmath>
#include <random>

#include "doctest.h"
#include "swkit/errors.hpp"
#include "swkit/guards.hpp"
#include "swkit/partition.hpp"
#include "swkit/poly.hpp"
#include "swkit/rational.hpp"

using namespace swkit;

TEST_SUITE("core-algebra") {

TEST_CASE("polynomial arithmetic") {
    CHECK(IntPoly{1, -1} * IntPoly{1, 1} == IntPoly{1, 0, -1});
    CHECK(IntPoly{1, 2, 3} + IntPoly() == IntPoly{1, 2, 3});
    CHECK(IntPoly{1, -1} * IntPoly{1, 2} == IntPoly{1, 1, -2});
    CHECK((IntPoly{1, 1} - IntPoly{1, 1}).is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly{0, 0, 0}.coeffs().empty());
    CHECK((-IntPoly{1, -2}) == IntPoly{-1, 2});
    CHECK(IntPoly{1, 2}.scaled(3) == IntPoly{3, 6});
}

TEST_CASE("substitute_power") {
    CHECK(IntPoly{1, 1}.substitute_power(2) == IntPoly{1, 0, 1});
    CHECK(IntPoly{1, -1, 1}.substitute_power(3) == IntPoly{1, 0, 0, -1, 0, 0, 1});
    CHECK(IntPoly().substitute_power(5).is_zero());
}

TEST_CASE("exact evaluation") {
    CHECK(IntPoly{1, -1}.eval(Rational(1)) == Rational(0));
    CHECK(IntPoly{1, 1}.eval(Rational(1, 3)) == Rational(4, 3));
    CHECK(IntPoly{1, -1, 1}.eval(Rational(-1, 3)) == Rational(13, 9));
}

TEST_CASE("reverse_with_sign") {
    CHECK(reverse_with_sign(IntPoly{1, -1}, 1, -1) == IntPoly{1, -1});
    CHECK(reverse_with_sign(IntPoly{1, 1}, 1, 1) == IntPoly{1, 1});
    CHECK(reverse_with_sign(IntPoly{1}, 2, -1) == IntPoly{0, 0, 1});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const long ell = trial % 6;
        std::vector<BigInt> c;
        for (long i = 0; i <= ell; ++i) c.emplace_back(coef(rng));
        IntPoly p(c);
        for (int eta : {-1, 1}) CHECK(reverse_with_sign(reverse_with_sign(p, ell, eta), ell, eta) == p);
    }
    CHECK_THROWS_AS(reverse_with_sign(IntPoly{1, 1, 1}, 1, 1), DegreeExceedsLength);
}

TEST_CASE("gauss_binomial") {
    CHECK(gauss_binomial(2, 1, 2) == 3);
    CHECK(gauss_binomial(5, 0, 7) == 1);
    CHECK(gauss_binomial(4, 2, 3) == 130);
    for (int q = 2; q <= 5; ++q)
        for (int t = 0; t <= 8; ++t)
            for (int j = 0; j <= t; ++j) CHECK(gauss_binomial(t, j, q) == gauss_binomial(t, t - j, q));
}

TEST_CASE("central_derivative examples") {
    CHECK(central_derivative(IntPoly{1, -1}, 1, 1) == 2);
    CHECK(central_derivative(IntPoly{1, -1, 1}, 2, 1) == 0);
    CHECK(central_derivative(IntPoly{1, -1, 1}, 2, 2) == 8);
    CHECK_THROWS_AS(central_derivative(IntPoly{1, 1, 1}, 1, 0), DegreeExceedsLength);
}

TEST_CASE("central_derivative properties") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const long d = trial % 7;
        std::vector<BigInt> a, b;
        for (long i = 0; i <= d; ++i) {
            a.emplace_back(coef(rng));
            b.emplace_back(coef(rng));
        }
        IntPoly p(a), q(b);
        CHECK(Rational(central_derivative(p, d, 0)) == p.eval(Rational(1)));
        for (long r = 0; r <= 4; ++r) CHECK(central_derivative(p + q, d, r) == central_derivative(p, d, r) + central_derivative(q, d, r));
    }
}

TEST_CASE("central_derivative against finite differences") {
    // f(s) = sum c_i 2^{(d - 2i) s}; r-th central difference with two Richardson steps.
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = trial % 7;
        std::vector<long> c(d + 1);
        for (auto& x : c) x = coef(rng);
        std::vector<BigInt> big(c.begin(), c.end());
        const long double ln2 = std::log(2.0L);
        auto f = [&](long double s) {
            long double total = 0;
            for (int i = 0; i <= d; ++i) total += c[i] * std::exp((d - 2 * i) * s * ln2);
            return total;
        };
        for (int r = 1; r <= 4; ++r) {
            auto diff = [&](long double h) {
                long double total = 0, binom = 1;
                for (int k = 0; k <= r; ++k) {
                    total += ((k % 2) ? -binom : binom) * f((r / 2.0L - k) * h);
                    binom = binom * (r - k) / (k + 1);
                }
                return total / std::pow(h, static_cast<long double>(r));
            };
            auto rich1 = [&](long double h) { return (4 * diff(h / 2) - diff(h)) / 3; };
            const long double h = 0.02L;
            const long double numeric = (16 * rich1(h / 2) - rich1(h)) / 15 / std::pow(ln2, static_cast<long double>(r));
            long double scale = 1;
            for (int i = 0; i <= d; ++i) scale += std::fabs(static_cast<long double>(c[i])) * std::pow(std::fabs(d - 2.0L * i), r);
            const long double exact = central_derivative(IntPoly(big), d, r).get_d();
            CHECK(std::fabs(numeric - exact) <= 1e-6L * scale);
        }
    }
}

TEST_CASE("enumerate_partitions") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    const auto two = enumerate_partitions(2);
    REQUIRE(two.size() == 4);
    CHECK(two[1] == Partition({1}));
    CHECK(two[2] == Partition({2}));
    CHECK(two[3] == Partition({1, 1}));
    CHECK(enumerate_partitions(4).size() == 12);
    CHECK_THROWS_AS(enumerate_partitions(13), GuardExceeded);
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
}

TEST_CASE("guard scale") {
    const double old = guard_scale();
    set_guard_scale(2.0);
    CHECK(scaled_guard(GuardDefaults::kPartitionSize) == 24);
    CHECK(enumerate_partitions(13).size() > 12);
    set_guard_scale(old);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-4, 6).to_string() == "-2/3");
    CHECK(to_decimal(pow_big(BigInt(10), 30)) == "1000000000000000000000000000000");
}

}
