#pragma once

#include <cstdint>
#include <vector>

#include "swkit/field.hpp"
#include "swkit/partition.hpp"
#include "swkit/poly.hpp"
#include "swkit/rational.hpp"
#include "swkit/torsion.hpp"

// Brute-force reference computations. They share no linear algebra with the
// main code paths: submodules are explicit element sets, pairings are
// evaluated with truncated-ring arithmetic, and counts come from scanning.
namespace swkit::oracle {

/// A submodule as the sorted list of element codes.
using ElementSet = std::vector<std::uint64_t>;

/// Every submodule of m by subset closure: start from {0} and repeatedly
/// adjoin one element, closing under +, K-scaling, t and (pair picture)
/// component projections; duplicates removed by element set.
std::vector<ElementSet> naive_submodules(const HermTorsionModule& m);

/// Scaled pairing t^{lambda_1} <x, y> evaluated in O'/t^{lambda_1}.
Vec naive_pairing(const HermTorsionModule& m, const Vec& x, const Vec& y);

/// Den(T, lambda) from the element-set enumeration: inert sums over isotropic
/// sets, split sums over chains I1 in I2 of the collapsed module.
IntPoly naive_den_local(PlaceKind kind, long q, const Partition& lambda);

/// Pairs (X1, X2) of injective m x n matrices over F_q with
/// X1^T X2 = diag(1^{n-a}, 0^a).
BigInt brute_isometry_count_split(int m, int n, int a, long q);

/// Number of j-dimensional subspaces of F_q^t, by spanning all j-tuples.
BigInt brute_grassmannian_count(int t, int j, long q);

}  // namespace swkit::oracle
