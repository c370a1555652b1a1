#include "doctest.h"
#include "swkit/errors.hpp"
#include "swkit/guards.hpp"
#include "swkit/weyl.hpp"

using namespace swkit;

namespace {

Bipartition bp(std::vector<int> plus, std::vector<int> minus) { return {Partition(std::move(plus)), Partition(std::move(minus))}; }

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("group orders and classes") {
    CHECK(enumerate_group(1).size() == 2);
    CHECK(enumerate_group(2).size() == 8);
    CHECK(enumerate_group(3).size() == 48);
    CHECK(WeylGroup::get(3)->classes().size() == 10);
    CHECK(WeylGroup::get(2)->classes().size() == 5);
    for (int d = 0; d <= 5; ++d) {
        long total = 0;
        for (const auto& [c, size] : class_sizes(d)) total += size;
        CHECK(static_cast<std::uint64_t>(total) == WeylGroup::get(d)->order());
    }
}

TEST_CASE("group axioms") {
    const auto g = WeylGroup::get(3);
    const auto id = SignedPerm::identity(3);
    for (std::size_t i = 0; i < g->elements().size(); i += 5) {
        const auto& a = g->elements()[i];
        CHECK(a * a.inverse() == id);
        for (std::size_t j = 0; j < g->elements().size(); j += 7) {
            const auto& b = g->elements()[j];
            CHECK(g->index_of(a * b) < g->order());
            CHECK(cycle_signature(b.inverse() * a * b) == cycle_signature(a));
        }
    }
}

TEST_CASE("cycle_signature") {
    CHECK(cycle_signature(SignedPerm::identity(2)) == bp({1, 1}, {}));
    CHECK(cycle_signature(SignedPerm{{-1}}) == bp({}, {1}));
    CHECK(cycle_signature(SignedPerm{{2, 1}}) == bp({2}, {}));
    CHECK(cycle_signature(SignedPerm{{2, -1}}) == bp({}, {2}));
    CHECK(to_string(bp({2}, {1})) == "(2)|(1)");
}

TEST_CASE("induced characters") {
    const auto reg = induced_character(1, {{1, BlockGroup::Sym, BlockChar::Trivial}});
    CHECK(reg.at(bp({1}, {})) == 2);
    CHECK(reg.at(bp({}, {1})) == 0);
    CHECK(induced_character(1, {{1, BlockGroup::Hyp, BlockChar::SignBar}}) == trivial_character(1));
    const auto ind = induced_character(2, {{1, BlockGroup::Hyp, BlockChar::Chi}, {1, BlockGroup::Hyp, BlockChar::Trivial}});
    CHECK(ind.dimension() == 2);
    CHECK_THROWS_AS(induced_character(3, {{1, BlockGroup::Hyp, BlockChar::Trivial}}), BadBlockSizes);
    CHECK(inner_product(induced_character(3, {{3, BlockGroup::Sym, BlockChar::Trivial}}), trivial_character(3)) == Rational(1));
}

TEST_CASE("rho") {
    CHECK(rho(3, 0) == trivial_character(3));
    for (int d = 0; d <= 5; ++d) {
        long total = 0;
        for (int i = 0; i <= d; ++i) {
            CHECK(rho(d, i).dimension() == binom(d, i));
            total += rho(d, i).dimension();
        }
        CHECK(total == (1L << d));
        CHECK(rho(d, d) == chi_closed_form(d));
    }
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) CHECK(inner_product(rho(4, i), rho(4, j)) == Rational(i == j ? 1 : 0));
    CHECK_THROWS_AS(rho(3, 4), IndexOutOfRange);
}

TEST_CASE("closed form of chi on elements") {
    const auto g = WeylGroup::get(4);
    const auto chi = chi_closed_form(4);
    for (const auto& x : g->elements()) {
        int neg = 0;
        for (int v : x.img) neg += v < 0 ? 1 : 0;
        CHECK(chi.at(cycle_signature(x)) == (neg % 2 ? -1 : 1));
    }
}

TEST_CASE("verification reports") {
    for (int d = 0; d <= 4; ++d) {
        CHECK(verify_rho_decomposition(d).pass);
        CHECK(verify_chi_lemma(d).pass);
        CHECK(verify_main_identity(d).pass);
        CHECK(main_identity_verified(d));
    }
}

TEST_CASE("graded characters") {
    CHECK(k_int_character(0).size() == 1);
    CHECK(k_eis_character(0)[0] == trivial_character(0));
    const auto eis1 = k_eis_character(1);
    CHECK(eis1[1] == chi_closed_form(1));
    const auto eis2 = k_eis_character(2);
    REQUIRE(eis2.size() == 3);
    CHECK(eis2[0] == trivial_character(2));
    CHECK(eis2[2] == chi_closed_form(2));
    CHECK(eis2[1].at(bp({}, {1, 1})) == -2);
    CHECK(eis2[1].at(bp({}, {2})) == 0);
    CHECK(eis2[1].at(bp({1}, {1})) == 0);
    CHECK(eis2[1].at(bp({1, 1}, {})) == 2);
    CHECK(eis2[1].at(bp({2}, {})) == 0);
    const std::vector<long> dims{1, 2, 1};
    const auto kint = k_int_character(2);
    for (int i = 0; i <= 2; ++i) CHECK(kint[i].dimension() == dims[i]);
}

TEST_CASE("rank guard") {
    const double old = guard_scale();
    set_guard_scale(0.05);
    CHECK_THROWS_AS(enumerate_group(5), GuardExceeded);
    CHECK(enumerate_group(4).size() == 384);
    set_guard_scale(old);
}

}
