#include "swkit/siegel_weil.hpp"

#include <algorithm>
#include <random>

#include "swkit/errors.hpp"
#include "swkit/partition.hpp"
#include "swkit/weyl.hpp"

namespace swkit {

IntPoly normalized_coefficient(const GlobalHermDatum& g) { return den_global(g); }

BigInt analytic_value(const GlobalHermDatum& g, int r) {
    if (r < 0) throw InputError("derivative order must be non-negative");
    return central_derivative(normalized_coefficient(g), g.d(), r);
}

BigInt geometric_degree(const GlobalHermDatum& g, int r) {
    if (r < 0) throw InputError("derivative order must be non-negative");
    const int d = g.d();
    const int rank = std::min(d, 6);
    if (!main_identity_verified(rank))
        throw IdentityNotVerified("W_" + std::to_string(rank) + " identity has not been verified in this process");
    const IntPoly poly = normalized_coefficient(g);
    const auto& c = poly.coeffs();
    // moments[k] = sum_i c_i i^k
    std::vector<BigInt> moments(r + 1, BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        BigInt power = 1;
        for (int k = 0; k <= r; ++k) {
            moments[k] += c[i] * power;
            power *= static_cast<long>(i);
        }
    }
    // (d - 2i)^r = sum_k C(r, k) d^{r-k} (-2)^k i^k
    BigInt out = 0, binom = 1;
    for (int k = 0; k <= r; ++k) {
        out += binom * pow_big(BigInt(d), static_cast<unsigned long>(r - k)) * pow_big(BigInt(-2), static_cast<unsigned long>(k)) * moments[k];
        binom = binom * (r - k) / (k + 1);
    }
    return out;
}

SymmetryResult symmetry_sign(const GlobalHermDatum& g) {
    SymmetryResult res;
    for (const auto& p : g.places)
        if (p.kind == PlaceKind::Inert && p.lambda.size() % 2) res.sign = -res.sign;
    const auto poly = normalized_coefficient(g);
    const long d = g.d();
    res.holds = poly.degree() == d;
    for (long i = 0; i <= d && res.holds; ++i) res.holds = poly.coeff(i) == res.sign * poly.coeff(d - i);
    return res;
}

PrefactorExponents prefactor_exponents(long deg_e, int n, long deg_omega) {
    PrefactorExponents out;
    out.s_coeff = -deg_e;
    out.constant = Rational(BigInt(n * deg_e), BigInt(2)) - Rational(BigInt(static_cast<long>(n) * n * deg_omega), BigInt(2));
    return out;
}

SiegelWeilReport siegel_weil_report(const GlobalHermDatum& g, int r_max) {
    if (r_max < 0) throw InputError("derivative order must be non-negative");
    SiegelWeilReport rep;
    rep.datum = g;
    rep.den_poly = normalized_coefficient(g);
    rep.d = g.d();
    auto sym = symmetry_sign(g);
    rep.symmetry_sign = sym.sign;
    rep.symmetry_holds = sym.holds;
    ensure_main_identity(std::min(rep.d, 6));
    for (int r = 0; r <= r_max; ++r) {
        rep.values[r] = analytic_value(g, r);
        rep.geometric_degrees[r] = geometric_degree(g, r);
    }
    return rep;
}

namespace {

// Largest |lambda_v| whose module stays within the default module-size guard
// and a modest enumeration cost.
int max_place_size(PlaceKind kind, long q_v) {
    if (kind == PlaceKind::Inert) return q_v <= 5 ? 4 : (q_v <= 9 ? 3 : 2);
    return q_v <= 5 ? 4 : (q_v <= 9 ? 3 : 2);
}

}  // namespace

std::vector<GlobalHermDatum> random_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<GlobalHermDatum> out;
    while (out.size() < count) {
        GlobalHermDatum g;
        g.q = pick(0, 1) ? 5 : 3;
        const int num_places = pick(1, 3);
        int budget = 4;
        for (int k = 0; k < num_places && budget > 0; ++k) {
            PlaceDatum p;
            p.kind = pick(0, 1) ? PlaceKind::Split : PlaceKind::Inert;
            p.deg_v = pick(1, 2);
            const long q_v = p.deg_v == 1 ? g.q : g.q * g.q;
            const int cap = std::min(budget, max_place_size(p.kind, q_v));
            const auto sizes = partitions_of(pick(1, cap));
            p.lambda = sizes[pick(0, static_cast<int>(sizes.size()) - 1)];
            budget -= p.lambda.size();
            g.places.push_back(std::move(p));
        }
        g.n = 1;
        for (const auto& p : g.places) g.n = std::max(g.n, p.lambda.num_parts());
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace swkit
