#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <string>
#include <utility>
#include <vector>

#include "swkit/partition.hpp"
#include "swkit/rational.hpp"

// Hyperoctahedral groups W_d = (Z/2)^d x| S_d and their induced characters.
namespace swkit {

/// Signed permutation of {1..d}: img[i] = +-(j+1) means e_i -> +-e_j.
struct SignedPerm {
    std::vector<int> img;

    int degree() const { return static_cast<int>(img.size()); }
    static SignedPerm identity(int d);
    /// (a * b)(i) = a(b(i)).
    SignedPerm operator*(const SignedPerm& b) const;
    SignedPerm inverse() const;
    bool operator==(const SignedPerm&) const = default;
};

/// (lambda+, lambda-): lengths of cycles whose sign product is +1 and -1.
using Bipartition = std::pair<Partition, Partition>;
std::string to_string(const Bipartition& b);

Bipartition cycle_signature(const SignedPerm& g);

/// Integer-valued class function on W_d keyed by conjugacy class.
struct ClassFunction {
    int d = 0;
    std::map<Bipartition, long> values;

    long at(const Bipartition& c) const;
    long dimension() const;
    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction scaled(long c) const;
    bool operator==(const ClassFunction&) const = default;
};

using GradedVirtualCharacter = std::vector<ClassFunction>;

/// One block of a Young-type subgroup: S_b (no sign changes) or W_b.
enum class BlockGroup { Sym, Hyp };
/// Character on a block: trivial, sign of the underlying permutation, or the
/// product of the sign entries.
enum class BlockChar { Trivial, SignBar, Chi };

struct Block {
    int size = 0;
    BlockGroup group = BlockGroup::Hyp;
    BlockChar chr = BlockChar::Trivial;
};
/// Consecutive blocks covering {1..d} in order.
using SubgroupSpec = std::vector<Block>;

class WeylGroup {
  public:
    /// Cached per d; the |W_d| limit is the guard for rank 6 times the guard scale.
    static std::shared_ptr<const WeylGroup> get(int d);

    int d() const { return d_; }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<SignedPerm>& elements() const { return elements_; }
    /// Class labels in sorted order with sizes and one representative each.
    const std::vector<Bipartition>& classes() const { return classes_; }
    const std::vector<long>& class_sizes() const { return sizes_; }
    const std::vector<SignedPerm>& representatives() const { return reps_; }
    int class_index(const Bipartition& c) const;

    /// Position of g in elements().
    std::uint32_t index_of(const SignedPerm& g) const;
    /// Indices of x^{-1} g_c x for every x, g_c the representative of class c.
    const std::vector<std::uint32_t>& conjugates(int c) const { return conjugates_[c]; }

    explicit WeylGroup(int d);

  private:
    int d_;
    std::vector<SignedPerm> elements_;
    std::vector<Bipartition> classes_;
    std::vector<long> sizes_;
    std::vector<SignedPerm> reps_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> conjugates_;
};

std::vector<SignedPerm> enumerate_group(int d);
std::map<Bipartition, long> class_sizes(int d);

/// (1/|G|) sum_g a(g) b(g).
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(int d);
/// Closed form (-1)^{#negative cycles}.
ClassFunction chi_closed_form(int d);

/// Ind_H^{W_d} of the product of block characters, by
/// (1/|H|) sum_{x : x^{-1} g x in H} phi(x^{-1} g x). Throws BadBlockSizes.
ClassFunction induced_character(int d, const SubgroupSpec& subgroup);
/// Induction from W_{b_1} x ... x W_{b_k} of the external product of the
/// given class functions on the factors.
ClassFunction induce_product(int d, const std::vector<ClassFunction>& factors);

/// rho_i = Ind_{W_i x W_{d-i}}(chi_i (x) 1).
ClassFunction rho(int d, int i);
GradedVirtualCharacter k_int_character(int d);
/// Grade i: sum_j (-1)^j Ind_{S_{i-j} x W_j x W_{d-i}}(1 (x) sgnbar_j (x) 1).
GradedVirtualCharacter k_eis_character(int d);

struct WeylReport {
    std::string check;
    int d = 0;
    bool pass = false;
    /// First mismatch, if any.
    int grade = -1;
    std::string class_label;
    std::string detail;
};

/// Ind_{S_d} 1 = sum rho_i, and <rho_i, rho_j> = delta_ij.
WeylReport verify_rho_decomposition(int d);
/// chi_d = sum_j (-1)^j Ind_{S_{d-j} x W_j}(1 (x) sgnbar_j).
WeylReport verify_chi_lemma(int d);
/// k_int_character(d) = k_eis_character(d) grade by grade. A PASS is recorded
/// in a process-wide registry.
WeylReport verify_main_identity(int d);

bool main_identity_verified(int d);
/// Runs verify_main_identity(d) unless already recorded; returns its outcome.
bool ensure_main_identity(int d);
/// Forgets every recorded verification (tests only).
void reset_main_identity_registry();

}  // namespace swkit
