#pragma once

#include <string>
#include <vector>

#include "swkit/field.hpp"
#include "swkit/partition.hpp"
#include "swkit/poly.hpp"
#include "swkit/rational.hpp"

namespace swkit {

/// One closed point: residue degree, split/inert, Jordan type of Q_v.
struct PlaceDatum {
    int deg_v = 1;
    PlaceKind kind = PlaceKind::Inert;
    Partition lambda;

    bool operator==(const PlaceDatum&) const = default;
};

/// Global invariant of (E, a): base field size, rank, local torsion data.
struct GlobalHermDatum {
    long q = 3;
    int n = 1;
    std::vector<PlaceDatum> places;

    /// Sum of deg_v * |lambda_v|.
    int d() const;
    /// Throws InputError unless q is an odd prime power, n >= 1, deg_v >= 1.
    void validate() const;
    std::string to_string() const;
    bool operator==(const GlobalHermDatum&) const = default;
};

/// m(a; T) = prod_{i<a} (1 - (eta q_v)^i T).
IntPoly m_poly(int a, PlaceKind kind, const BigInt& q_v);

/// Local Siegel series of a place of residue field size q_v, as a polynomial
/// in T. Inert: sum over isotropic I of T^{2 l'(I)} m(t'(I^perp / I)).
/// Split: sum over chains I1 in I2 of T^{l(I1) + l(Q/I2)} m(t(I2/I1)).
/// Results are memoized and safe to request concurrently.
IntPoly den_local(PlaceKind kind, long q_v, const Partition& lambda);
/// Split value recomputed from isotropic submodules of the pair picture
/// (independent of the chain sum above).
IntPoly den_local_split_pair_picture(long q_v, const Partition& lambda);

/// prod_v den_local(q^{deg v}, lambda_v)(T^{deg v}).
IntPoly den_global(const GlobalHermDatum& g);

/// prod_{i=1}^n (1 - (eta q)^{-i} T) at T = (eta q)^{-j}.
Rational den_selfdual(int n, int j, PlaceKind kind, long q);

/// True iff den_local equals (eta T)^{|lambda|} den_local(1/T).
bool functional_equation_check(PlaceKind kind, long q_v, const Partition& lambda);

/// Gram diag(t^{a_1}, ..., t^{a_n}) over O' (split: the analogous pair pairing).
struct DiagonalLattice {
    long q = 3;
    PlaceKind kind = PlaceKind::Inert;
    std::vector<int> vals;

    static DiagonalLattice unimodular(long q, PlaceKind kind, int rank) { return {q, kind, std::vector<int>(rank, 0)}; }
    int rank() const { return static_cast<int>(vals.size()); }
    int max_val() const;
    /// Jordan type of L^dual / L: the valuations, descending, zeros dropped.
    Partition jordan_type() const;
    void validate() const;
    std::string to_string() const;
};

/// #Rep_{M,L}(O/t^N). Chooses exhaustive search for small search spaces and
/// exact character-sum counting otherwise.
BigInt rep_count(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc);
/// Exhaustive search over all m x n matrices (split: both pairings checked).
BigInt rep_count_brute(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc);
/// Row-by-row counting: the distribution of each row's contribution
/// g_k x_k^* x_k is Fourier transformed over the additive group of
/// Hermitian (split: all) n x n matrices, with exact cyclotomic arithmetic.
BigInt rep_count_fourier(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc);

/// #Rep / q^{N n (2m - n)}.
Rational density_ratio(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc);

struct DensityResult {
    Rational value;
    int stabilized_at = 0;  // first N of the agreeing pair
    std::vector<Rational> ratios;  // ratio for N = first_n, first_n + 1, ...
    int first_n = 0;
};
/// Stabilized density: two consecutive N >= max_val(L) + 1 agreeing exactly.
/// Throws NotStabilized when no agreement occurs up to n_max.
DensityResult density_oracle(const DiagonalLattice& m, const DiagonalLattice& l, int n_max);

struct CyReport {
    bool pass = false;
    DiagonalLattice lattice;
    int j = 0;
    Rational lhs;        // Den((eta q)^{-j}, lambda(L))
    Rational rhs;        // density / den_selfdual
    Rational density;
    Rational selfdual;
    int stabilized_at = 0;
};
CyReport verify_cy(const DiagonalLattice& l, int j, int n_max);

/// q^{m^2 - (m-n)^2} prod_{i=0}^{n+a-1} (1 - q^{i-m}).
BigInt isom_count_split(int m, int n, int a, long q);

}  // namespace swkit
