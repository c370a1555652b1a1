#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swkit/field.hpp"
#include "swkit/partition.hpp"
#include "swkit/rational.hpp"

namespace swkit {

using Vec = std::vector<FieldElem>;

/// How a place is realized as an explicit module.
///   Inert: Q = (+) O'/t^{lambda_i}, O' = F_{q^2}[t], coordinates over F_{q^2}.
///   SplitCollapsed: a single O-module of type lambda over F_q (no pairing).
///   SplitPair: Q = Q1 (+) Q2 with Q1, Q2 of type lambda over F_q and the
///     Hermitian pairing built from the duality Q1 x Q2 -> F/O.
enum class ModulePicture { Inert, SplitCollapsed, SplitPair };

/// Explicit finite torsion module of Jordan type lambda with its standard
/// diagonal Hermitian form <e_i, e_j> = delta_ij t^{-lambda_i}. Elements are
/// coordinate vectors over the residue field K: slot (i, k) holds the
/// coefficient of t^k e_i.
class HermTorsionModule {
  public:
    HermTorsionModule(ModulePicture picture, long q, Partition lambda);
    static HermTorsionModule jordan(PlaceKind kind, long q, const Partition& lambda) {
        return {kind == PlaceKind::Inert ? ModulePicture::Inert : ModulePicture::SplitCollapsed, q, lambda};
    }

    ModulePicture picture() const { return picture_; }
    PlaceKind kind() const { return picture_ == ModulePicture::Inert ? PlaceKind::Inert : PlaceKind::Split; }
    long q() const { return q_; }
    const Partition& lambda() const { return lambda_; }
    const FiniteField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    /// Dimension over K.
    int dim() const { return dim_; }
    BigInt cardinality() const;
    bool has_pairing() const { return picture_ != ModulePicture::SplitCollapsed; }
    /// Number of coefficients of a scaled pairing value.
    int pairing_width() const;

    Vec zero_vec() const { return Vec(dim_, FieldElem{0}); }
    Vec basis_vec(int slot) const;
    int slot(int block, int power, int component = 0) const;
    Vec add(const Vec& x, const Vec& y) const;
    Vec scale(FieldElem a, const Vec& x) const;
    Vec t_times(const Vec& x) const;
    /// Component projection in the pair picture (component 0 or 1).
    Vec project(const Vec& x, int component) const;
    int component_of_slot(int s) const;

    /// Scaled value t^{lambda_1} <x, y> in O'/t^{lambda_1}, as coefficients over K
    /// (pair picture: both coordinates of O' = O x O, concatenated).
    Vec pairing(const Vec& x, const Vec& y) const;
    /// sigma applied to a scaled pairing value.
    Vec sigma_value(const Vec& v) const;
    /// Rows r_m with pairing(x, y)_m = sum_j r_m[j] x_j.
    std::vector<Vec> pairing_rows(const Vec& y) const;

    /// Mixed-radix index of a vector; used for canonical ordering.
    std::uint64_t encode(const Vec& x) const;
    Vec decode(std::uint64_t code) const;

  private:
    void check(const Vec& x) const;

    ModulePicture picture_;
    long q_;
    Partition lambda_;
    FieldPtr field_;
    std::vector<FieldElem> sigma_;
    std::vector<int> offset_;  // block offsets within one component
    int half_ = 0;             // |lambda|
    int dim_ = 0;
};

/// Submodule stored as the reduced row echelon basis of its K-span.
struct Submodule {
    std::vector<Vec> basis;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(basis.size()); }
    std::string key() const;
    bool operator==(const Submodule& o) const { return basis == o.basis; }
};

Submodule zero_submodule(const HermTorsionModule& m);
Submodule whole_module(const HermTorsionModule& m);
/// Smallest submodule containing gens (closed under K, t and, in the pair
/// picture, the component projections).
Submodule span(const HermTorsionModule& m, const std::vector<Vec>& gens);
bool contains(const HermTorsionModule& m, const Submodule& s, const Vec& v);
bool is_subset(const HermTorsionModule& m, const Submodule& a, const Submodule& b);
BigInt cardinality(const HermTorsionModule& m, const Submodule& s);
/// Every element, sorted by encoding; guarded by the module-size limit.
std::vector<Vec> elements(const HermTorsionModule& m, const Submodule& s);
/// Minimal generating set over O': lifts of a basis of s / t s.
std::vector<Vec> generators(const HermTorsionModule& m, const Submodule& s);

/// All submodules, each once, ordered by (dim, key). Guarded by the module size.
std::vector<Submodule> enumerate_submodules(const HermTorsionModule& m);
/// All submodules containing base.
std::vector<Submodule> enumerate_submodules_containing(const HermTorsionModule& m, const Submodule& base);
/// All isotropic submodules (requires a pairing).
std::vector<Submodule> enumerate_isotropic(const HermTorsionModule& m);

bool is_isotropic(const HermTorsionModule& m, const Submodule& s);
Submodule orthogonal_complement(const HermTorsionModule& m, const Submodule& s);

struct QuotientInvariants {
    int ell_prime = 0;
    int t_prime = 0;
};
/// Length and minimal number of generators of B/A, in the normalization
/// of the place (pair picture halves the O-length).
QuotientInvariants quotient_invariants(const HermTorsionModule& m, const Submodule& a, const Submodule& b);
/// K-dimension of b / (a + t b).
int generator_count(const HermTorsionModule& m, const Submodule& a, const Submodule& b);

/// Jordan type of B/A over the residue field of the picture.
Partition jordan_type(const HermTorsionModule& m, const Submodule& a, const Submodule& b);
Partition jordan_type(const HermTorsionModule& m);

/// True when the pairing has trivial radical on the whole module.
bool is_nondegenerate(const HermTorsionModule& m);

}  // namespace swkit
