#include "doctest.h"
#include "swkit/errors.hpp"
#include "swkit/siegel_weil.hpp"
#include "swkit/weyl.hpp"

using namespace swkit;

namespace {

const PlaceDatum kInert1{1, PlaceKind::Inert, Partition({1})};
const PlaceDatum kInert2{1, PlaceKind::Inert, Partition({2})};
const PlaceDatum kSplit1{1, PlaceKind::Split, Partition({1})};

GlobalHermDatum datum(std::vector<PlaceDatum> places) { return {3, 1, std::move(places)}; }

}  // namespace

TEST_SUITE("siegel-weil") {

TEST_CASE("normalized_coefficient") {
    CHECK(normalized_coefficient(datum({})) == IntPoly{1});
    CHECK(normalized_coefficient(datum({kSplit1})) == IntPoly{1, 1});
    CHECK(normalized_coefficient(datum({kInert1, kSplit1})) == IntPoly{1, 0, -1});
}

TEST_CASE("analytic_value") {
    CHECK(analytic_value(datum({kSplit1}), 1) == 0);
    CHECK(analytic_value(datum({kInert1}), 1) == 2);
    CHECK(analytic_value(datum({kInert2}), 1) == 0);
    CHECK(analytic_value(datum({kInert2}), 2) == 8);
    CHECK(analytic_value(datum({}), 0) == 1);
    CHECK(analytic_value(datum({}), 3) == 0);
}

TEST_CASE("geometric_degree requires the verified identity") {
    reset_main_identity_registry();
    CHECK_THROWS_AS(geometric_degree(datum({kInert2}), 2), IdentityNotVerified);
    REQUIRE(ensure_main_identity(2));
    CHECK(geometric_degree(datum({kInert2}), 2) == 8);
    CHECK(geometric_degree(datum({kInert2}), 0) == 1);
    REQUIRE(ensure_main_identity(0));
    CHECK(geometric_degree(datum({}), 0) == 1);
    CHECK(geometric_degree(datum({}), 2) == 0);
}

TEST_CASE("symmetry_sign") {
    CHECK(symmetry_sign(datum({kInert2})).sign == 1);
    CHECK(symmetry_sign(datum({kInert2})).holds);
    CHECK(symmetry_sign(datum({kInert1})).sign == -1);
    CHECK(symmetry_sign(datum({kInert1})).holds);
    CHECK(symmetry_sign(datum({kSplit1, {2, PlaceKind::Split, Partition({2, 1})}})).sign == 1);
    // sign -1 with even d: the middle coefficient must vanish
    const auto odd_even = datum({kInert1, kSplit1});
    CHECK(symmetry_sign(odd_even).sign == -1);
    CHECK(symmetry_sign(odd_even).holds);
}

TEST_CASE("prefactor_exponents") {
    const auto a = prefactor_exponents(0, 1, 0);
    CHECK(a.s_coeff == 0);
    CHECK(a.constant == Rational(0));
    const auto b = prefactor_exponents(-2, 2, 2);
    CHECK(b.s_coeff == 2);
    CHECK(b.constant == Rational(-6));
    const auto c = prefactor_exponents(1, 1, 0);
    CHECK(c.s_coeff == -1);
    CHECK(c.constant == Rational(1, 2));
    CHECK(c.character == "chi(det E)");
}

TEST_CASE("random corpus") {
    const auto corpus = random_corpus(30, 99);
    CHECK(corpus == random_corpus(30, 99));
    CHECK(corpus.size() == 30);
    for (const auto& g : corpus) {
        CHECK((g.q == 3 || g.q == 5));
        CHECK(g.places.size() >= 1);
        CHECK(g.places.size() <= 3);
        int total = 0;
        for (const auto& p : g.places) total += p.lambda.size();
        CHECK(total <= 4);
        CHECK(normalized_coefficient(g).degree() == g.d());
    }
}

TEST_CASE("report on corpus data") {
    for (const auto& g : random_corpus(20, 7)) {
        const auto rep = siegel_weil_report(g, 4);
        CHECK(rep.consistent());
        CHECK(rep.symmetry_holds);
        CHECK(rep.values.at(0) >= 0);
        CHECK(Rational(rep.values.at(0)) == rep.den_poly.eval(Rational(1)));
        if (rep.symmetry_sign == 1)
            for (int r = 1; r <= 3; r += 2) CHECK(rep.values.at(r) == 0);
    }
}

}
