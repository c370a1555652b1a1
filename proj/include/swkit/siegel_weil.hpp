#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swkit/density.hpp"
#include "swkit/poly.hpp"
#include "swkit/rational.hpp"

namespace swkit {

/// Normalized Fourier coefficient as a polynomial in T = q^{-2s}; equals den_global.
IntPoly normalized_coefficient(const GlobalHermDatum& g);

/// (log q)^{-r} (d/ds)^r q^{ds} E(s) at s = 0, i.e. sum_i c_i (d - 2i)^r.
BigInt analytic_value(const GlobalHermDatum& g, int r);

/// sum_i c_i (d - 2i)^r through a binomial expansion in the moments sum_i c_i i^k.
/// Requires verify_main_identity(min(d, 6)) to have passed in this process;
/// throws IdentityNotVerified otherwise.
BigInt geometric_degree(const GlobalHermDatum& g, int r);

struct SymmetryResult {
    int sign = 1;
    /// c_i == sign * c_{d-i} for every i.
    bool holds = false;
};
/// sign = prod over inert places of (-1)^{|lambda_v|}.
SymmetryResult symmetry_sign(const GlobalHermDatum& g);

struct PrefactorExponents {
    BigInt s_coeff;      // -deg E
    Rational constant;   // n deg E / 2 - n^2 deg omega / 2
    std::string character = "chi(det E)";
    std::string l_factor = "L_n(s)^{-1}";
};
PrefactorExponents prefactor_exponents(long deg_e, int n, long deg_omega);

struct SiegelWeilReport {
    GlobalHermDatum datum;
    IntPoly den_poly;
    int d = 0;
    std::map<int, BigInt> values;
    int symmetry_sign = 1;
    bool symmetry_holds = false;
    std::map<int, BigInt> geometric_degrees;

    bool consistent() const { return values == geometric_degrees; }
};
/// Analytic and geometric sides for r = 0..r_max; runs the W_d identity
/// check on demand.
SiegelWeilReport siegel_weil_report(const GlobalHermDatum& g, int r_max);

/// Deterministic random data: up to 3 places, total |lambda| <= 4,
/// q in {3, 5}, place degree 1 or 2, kept inside the enumeration guards.
std::vector<GlobalHermDatum> random_corpus(std::size_t count, std::uint64_t seed);

}  // namespace swkit
