#include "doctest.h"
#include "swkit/errors.hpp"
#include "swkit/springer.hpp"

using namespace swkit;

TEST_SUITE("springer") {

TEST_CASE("p_coh_place") {
    CHECK(p_coh_place(0, 3) == IntPoly{1});
    CHECK(p_coh_place(2, 2) == IntPoly{1, -3, 2});
    CHECK(p_coh_place(1, 9, 2) == IntPoly{1, 0, -1});
}

TEST_CASE("q-binomial sum matches the product") {
    CHECK(p_coh_grassmann_sum(0, 5) == IntPoly{1});
    CHECK(p_coh_grassmann_sum(2, 2) == IntPoly{1, -3, 2});
    CHECK(p_coh_grassmann_sum(3, 3) == IntPoly{1, -13, 39, -27});
    for (int q : {2, 3, 4, 5})
        for (int t = 0; t <= 8; ++t) CHECK(p_coh_grassmann_sum(t, q) == p_coh_place(t, q));
    CHECK_THROWS_AS(p_coh_grassmann_sum(11, 3), GuardExceeded);
}

TEST_CASE("p_herm_place") {
    CHECK(p_herm_place(2, PlaceKind::Inert, 3) == IntPoly{1, 2, -3});
    CHECK(p_herm_place(2, PlaceKind::Split, 3) == IntPoly{1, -4, 3});
    CHECK(p_herm_place(0, PlaceKind::Inert, 3) == IntPoly{1});
}

TEST_CASE("inert sign twist") {
    CHECK(inert_sign_twist_check(2, 3));
    CHECK(inert_sign_twist_check(3, 2));
    CHECK(inert_sign_twist_check(0, 3));
    for (int t = 0; t <= 5; ++t) CHECK(inert_sign_twist_check(t, 9, 2));
}

TEST_CASE("p_global") {
    CHECK(p_global({3, 1, {}}) == IntPoly{1});
    CHECK(p_global({3, 2, {{1, PlaceKind::Split, Partition({1, 1})}}}) == IntPoly{1, -4, 3});
    CHECK(p_global({3, 2, {{1, PlaceKind::Inert, Partition({3, 1})}}}) == IntPoly{1, 2, -3});
}

TEST_CASE("steinberg_trace") {
    CHECK(steinberg_trace({3, 2, {{1, PlaceKind::Split, Partition({1, 1})}}}) == 3);
    CHECK(steinberg_trace({3, 1, {{2, PlaceKind::Split, Partition({1})}}}) == -1);
    CHECK(steinberg_trace({3, 1, {}}) == 1);
    CHECK_THROWS_AS(steinberg_trace({3, 1, {{1, PlaceKind::Inert, Partition({2})}}}), NotSemisimple);
}

}
