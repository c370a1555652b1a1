#include "doctest.h"
#include "swkit/density.hpp"
#include "swkit/errors.hpp"
#include "swkit/oracle.hpp"

using namespace swkit;

namespace {

GlobalHermDatum datum(long q, std::vector<PlaceDatum> places, int n = 1) { return {q, n, std::move(places)}; }

}  // namespace

TEST_SUITE("density") {

TEST_CASE("m_poly") {
    CHECK(m_poly(0, PlaceKind::Split, 3) == IntPoly{1});
    CHECK(m_poly(2, PlaceKind::Split, 3) == IntPoly{1, -4, 3});
    CHECK(m_poly(2, PlaceKind::Inert, 3) == IntPoly{1, 2, -3});
}

TEST_CASE("den_local examples") {
    CHECK(den_local(PlaceKind::Inert, 3, Partition({1})) == IntPoly{1, -1});
    CHECK(den_local(PlaceKind::Split, 3, Partition({1})) == IntPoly{1, 1});
    CHECK(den_local(PlaceKind::Inert, 3, Partition({2})) == IntPoly{1, -1, 1});
    for (long q : {3L, 5L, 7L, 9L}) CHECK(den_local(PlaceKind::Split, q, Partition({2})) == IntPoly{1, 1, 1});
    CHECK(den_local(PlaceKind::Inert, 3, Partition()) == IntPoly{1});
    CHECK_THROWS_AS(den_local(PlaceKind::Inert, 4, Partition({1})), InputError);
}

TEST_CASE("den_local degree, constant term and functional equation") {
    for (long q : {3L, 5L}) {
        for (const auto& lam : enumerate_partitions(q == 3 ? 4 : 3)) {
            for (PlaceKind kind : {PlaceKind::Inert, PlaceKind::Split}) {
                const auto p = den_local(kind, q, lam);
                CHECK(p.degree() == lam.size());
                CHECK(p.coeff(0) == 1);
                CHECK(functional_equation_check(kind, q, lam));
                CHECK(p == reverse_with_sign(p, lam.size(), eta(kind)));
            }
        }
    }
}

TEST_CASE("split pair picture and element-set oracle agree") {
    for (const auto& lam : enumerate_partitions(3)) {
        CHECK(den_local(PlaceKind::Split, 3, lam) == den_local_split_pair_picture(3, lam));
        CHECK(den_local(PlaceKind::Split, 3, lam) == oracle::naive_den_local(PlaceKind::Split, 3, lam));
        CHECK(den_local(PlaceKind::Inert, 3, lam) == oracle::naive_den_local(PlaceKind::Inert, 3, lam));
    }
}

TEST_CASE("den_global") {
    CHECK(den_global(datum(3, {})) == IntPoly{1});
    CHECK(den_global(datum(3, {{1, PlaceKind::Inert, Partition({1})}})) == IntPoly{1, -1});
    CHECK(den_global(datum(3, {{2, PlaceKind::Split, Partition({1})}})) == IntPoly{1, 0, 1});
    const auto two = datum(3, {{1, PlaceKind::Inert, Partition({1})}, {1, PlaceKind::Split, Partition({1})}});
    CHECK(den_global(two) == IntPoly{1, 0, -1});
    CHECK(den_global(two).degree() == two.d());
    // a degree-2 place uses q_v = q^2
    const auto deg2 = datum(3, {{2, PlaceKind::Inert, Partition({1, 1})}});
    CHECK(den_global(deg2) == den_local(PlaceKind::Inert, 9, Partition({1, 1})).substitute_power(2));
}

TEST_CASE("den_selfdual") {
    CHECK(den_selfdual(1, 0, PlaceKind::Inert, 3) == Rational(4, 3));
    CHECK(den_selfdual(1, 0, PlaceKind::Split, 3) == Rational(2, 3));
    CHECK(den_selfdual(2, 1, PlaceKind::Split, 3) == Rational(208, 243));
}

TEST_CASE("rep_count") {
    DiagonalLattice m1{3, PlaceKind::Inert, {0}};
    CHECK(rep_count(m1, {3, PlaceKind::Inert, {1}}, 2) == 0);
    CHECK(rep_count({3, PlaceKind::Split, {0}}, {3, PlaceKind::Split, {1}}, 2) == 12);
    CHECK(rep_count({3, PlaceKind::Split, {0}}, {3, PlaceKind::Split, {0}}, 1) == 2);
    for (PlaceKind kind : {PlaceKind::Inert, PlaceKind::Split}) {
        DiagonalLattice m{3, kind, {0, 0}}, l{3, kind, {1}};
        for (int n = 1; n <= 2; ++n) CHECK(rep_count_brute(m, l, n) == rep_count_fourier(m, l, n));
    }
}

TEST_CASE("density_oracle") {
    CHECK(density_oracle({3, PlaceKind::Split, {0}}, {3, PlaceKind::Split, {0}}, 4).value == Rational(2, 3));
    CHECK(density_oracle({3, PlaceKind::Inert, {0}}, {3, PlaceKind::Inert, {0}}, 4).value == Rational(4, 3));
    CHECK(density_oracle({3, PlaceKind::Split, {0}}, {3, PlaceKind::Split, {1}}, 4).value == Rational(4, 3));
}

TEST_CASE("verify_cy") {
    const auto split = verify_cy({3, PlaceKind::Split, {1}}, 0, 4);
    CHECK(split.pass);
    CHECK(split.lhs == Rational(2));
    const auto inert = verify_cy({3, PlaceKind::Inert, {1}}, 0, 4);
    CHECK(inert.pass);
    CHECK(inert.lhs == Rational(0));
    for (int j = 0; j <= 1; ++j) CHECK(verify_cy({3, PlaceKind::Inert, {0}}, j, 4).lhs == Rational(1));
}

TEST_CASE("isom_count_split") {
    CHECK(isom_count_split(1, 1, 0, 3) == 2);
    CHECK(isom_count_split(2, 1, 1, 2) == 3);
    CHECK(isom_count_split(0, 0, 0, 3) == 1);
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= m; ++n)
            for (int a = 0; a <= n; ++a) CHECK(isom_count_split(m, n, a, 2) == oracle::brute_isometry_count_split(m, n, a, 2));
}

}
