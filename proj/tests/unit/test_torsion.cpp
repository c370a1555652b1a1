#include "doctest.h"
#include "swkit/errors.hpp"
#include "swkit/oracle.hpp"
#include "swkit/torsion.hpp"

using namespace swkit;

namespace {

HermTorsionModule inert(long q, std::vector<int> parts) { return {ModulePicture::Inert, q, Partition(std::move(parts))}; }

}  // namespace

TEST_SUITE("torsion-hermitian") {

TEST_CASE("submodule counts") {
    CHECK(enumerate_submodules(inert(3, {1})).size() == 2);
    CHECK(enumerate_submodules(inert(3, {2})).size() == 3);
    CHECK(enumerate_submodules(inert(3, {1, 1})).size() == 12);
    CHECK(enumerate_submodules(HermTorsionModule(ModulePicture::SplitCollapsed, 3, Partition({1, 1}))).size() == 6);
    CHECK(enumerate_submodules(HermTorsionModule(ModulePicture::SplitPair, 3, Partition({1}))).size() == 4);
}

TEST_CASE("isotropic submodules") {
    CHECK(enumerate_isotropic(inert(3, {1})).size() == 1);
    CHECK(enumerate_isotropic(inert(3, {2})).size() == 2);
    // zero plus the q + 1 isotropic lines of the Hermitian plane
    CHECK(enumerate_isotropic(inert(3, {1, 1})).size() == 5);
    CHECK(enumerate_isotropic(inert(5, {1, 1})).size() == 7);
    CHECK(enumerate_isotropic(HermTorsionModule(ModulePicture::SplitPair, 3, Partition({1}))).size() == 3);
    CHECK_THROWS(enumerate_isotropic(HermTorsionModule(ModulePicture::SplitCollapsed, 3, Partition({1}))));
}

TEST_CASE("invariants of the whole module") {
    auto m = inert(3, {2, 1});
    const auto zero = zero_submodule(m), all = whole_module(m);
    CHECK(quotient_invariants(m, zero, all).ell_prime == 3);
    CHECK(quotient_invariants(m, zero, all).t_prime == 2);
    CHECK(jordan_type(m) == Partition({2, 1}));
    CHECK(cardinality(m, all) == 729);
    CHECK(is_nondegenerate(m));

    HermTorsionModule pair(ModulePicture::SplitPair, 3, Partition({1, 1}));
    const auto q = quotient_invariants(pair, zero_submodule(pair), whole_module(pair));
    CHECK(q.ell_prime == 2);
    CHECK(q.t_prime == 2);
    CHECK(is_nondegenerate(pair));
}

TEST_CASE("span and containment") {
    auto m = inert(3, {2});
    const auto gen = m.basis_vec(m.slot(0, 0));
    const auto s = span(m, {m.t_times(gen)});
    CHECK(s.dim() == 1);
    CHECK(contains(m, s, m.t_times(gen)));
    CHECK_FALSE(contains(m, s, gen));
    CHECK(is_subset(m, s, whole_module(m)));
    CHECK(span(m, {gen}) == whole_module(m));
    CHECK(generators(m, whole_module(m)).size() == 1);
}

TEST_CASE("biduality and complement sizes") {
    for (const auto& lam : enumerate_partitions(3)) {
        if (lam.empty()) continue;
        for (ModulePicture pic : {ModulePicture::Inert, ModulePicture::SplitPair}) {
            HermTorsionModule m(pic, 3, lam);
            const BigInt total = cardinality(m, whole_module(m));
            for (const auto& s : enumerate_submodules(m)) {
                const auto perp = orthogonal_complement(m, s);
                CHECK(cardinality(m, s) * cardinality(m, perp) == total);
                CHECK(orthogonal_complement(m, perp) == s);
                CHECK(is_isotropic(m, s) == is_subset(m, s, perp));
            }
        }
    }
}

TEST_CASE("isotropic quotients stay nondegenerate in type") {
    auto m = inert(3, {2, 1});
    for (const auto& i : enumerate_isotropic(m)) {
        const auto perp = orthogonal_complement(m, i);
        const auto inv = quotient_invariants(m, i, perp);
        CHECK(inv.ell_prime == jordan_type(m, i, perp).size());
        CHECK(inv.t_prime == jordan_type(m, i, perp).num_parts());
        CHECK(2 * quotient_invariants(m, zero_submodule(m), i).ell_prime + inv.ell_prime == 3);
    }
}

TEST_CASE("enumeration agrees with the element-set oracle") {
    for (const auto& lam : enumerate_partitions(3)) {
        for (ModulePicture pic : {ModulePicture::Inert, ModulePicture::SplitCollapsed, ModulePicture::SplitPair}) {
            if (pic == ModulePicture::SplitPair && lam.size() > 2) continue;
            HermTorsionModule m(pic, 3, lam);
            CHECK(enumerate_submodules(m).size() == oracle::naive_submodules(m).size());
        }
    }
}

TEST_CASE("pairing matches truncated-ring evaluation") {
    auto m = inert(3, {2, 1});
    const auto all = elements(m, whole_module(m));
    for (std::size_t i = 0; i < all.size(); i += 37)
        for (std::size_t j = 0; j < all.size(); j += 41) CHECK(m.pairing(all[i], all[j]) == oracle::naive_pairing(m, all[i], all[j]));
}

}
