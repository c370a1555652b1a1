#pragma once

#include "swkit/density.hpp"
#include "swkit/poly.hpp"
#include "swkit/rational.hpp"

// Frobenius trace polynomials of the Springer sheaves, place by place.
namespace swkit {

/// prod_{i<t} (1 - q_v^i T^{deg_v}).
IntPoly p_coh_place(int t, const BigInt& q_v, int deg_v = 1);

/// sum_j (-1)^j q^{j(j-1)/2} #Gr(j, t)(F_q) T^j. Guarded by the Grassmann rank.
IntPoly p_coh_grassmann_sum(int t, const BigInt& q);

/// prod_{j<t'} (1 - (eta q_v)^j T^{deg_v}).
IntPoly p_herm_place(int t_prime, PlaceKind kind, const BigInt& q_v, int deg_v = 1);

/// Compares p_herm_place(t, inert, q_v, deg_v) with prod (1 - Q^i T) expanded
/// in a formal Q and specialized at Q = -q_v.
bool inert_sign_twist_check(int t, const BigInt& q_v, int deg_v = 1);

/// prod_v p_herm_place(numParts(lambda_v), kind_v, q^{deg v}, deg v).
IntPoly p_global(const GlobalHermDatum& g);

/// eps * prod_v q_v^{d_v (d_v - 1) / 2} for semisimple data lambda_v = (1^{d_v}),
/// eps = prod_v (-1)^{(deg v - 1) d_v}. Throws NotSemisimple otherwise.
BigInt steinberg_trace(const GlobalHermDatum& g);

}  // namespace swkit
