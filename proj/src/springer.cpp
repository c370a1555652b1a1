#include "swkit/springer.hpp"

#include <string>
#include <vector>

#include "swkit/errors.hpp"
#include "swkit/guards.hpp"
#include "swkit/partition.hpp"

namespace swkit {

namespace {

// (1 - a T^deg)
IntPoly linear_factor(const BigInt& a, int deg) {
    return IntPoly::constant(1) - IntPoly::monomial(a, static_cast<std::size_t>(deg));
}

void check_rank(int t) {
    if (t < 0) throw InputError("rank must be non-negative");
}

}  // namespace

IntPoly p_coh_place(int t, const BigInt& q_v, int deg_v) {
    check_rank(t);
    IntPoly out{1};
    BigInt power = 1;
    for (int i = 0; i < t; ++i) {
        out *= linear_factor(power, deg_v);
        power *= q_v;
    }
    return out;
}

IntPoly p_coh_grassmann_sum(int t, const BigInt& q) {
    check_rank(t);
    if (t > scaled_guard(GuardDefaults::kGrassmannRank))
        throw GuardExceeded("Grassmannian rank " + std::to_string(t) + " above limit");
    std::vector<BigInt> coeffs;
    for (int j = 0; j <= t; ++j) {
        BigInt c = pow_big(q, static_cast<unsigned long>(j) * (j - 1) / 2) * gauss_binomial(t, j, q);
        coeffs.push_back(j % 2 ? BigInt(-c) : c);
    }
    return IntPoly(coeffs);
}

IntPoly p_herm_place(int t_prime, PlaceKind kind, const BigInt& q_v, int deg_v) {
    return p_coh_place(t_prime, BigInt(eta(kind) * q_v), deg_v);
}

bool inert_sign_twist_check(int t, const BigInt& q_v, int deg_v) {
    check_rank(t);
    if (t > scaled_guard(GuardDefaults::kGrassmannRank))
        throw GuardExceeded("twist rank " + std::to_string(t) + " above limit");
    // bivariate[k][e]: coefficient of T^k Q^e in prod_{i<t} (1 - Q^i T)
    std::vector<std::vector<BigInt>> bivariate(1, std::vector<BigInt>{1});
    for (int i = 0; i < t; ++i) {
        std::vector<std::vector<BigInt>> next(bivariate.size() + 1);
        for (std::size_t k = 0; k < bivariate.size(); ++k) {
            for (std::size_t e = 0; e < bivariate[k].size(); ++e) {
                auto& keep = next[k];
                if (keep.size() <= e) keep.resize(e + 1);
                keep[e] += bivariate[k][e];
                auto& shifted = next[k + 1];
                if (shifted.size() <= e + i) shifted.resize(e + i + 1);
                shifted[e + i] -= bivariate[k][e];
            }
        }
        bivariate = std::move(next);
    }
    const BigInt twisted = -q_v;
    std::vector<BigInt> coeffs(bivariate.size() * deg_v, BigInt(0));
    for (std::size_t k = 0; k < bivariate.size(); ++k) {
        BigInt value = 0;
        for (std::size_t e = 0; e < bivariate[k].size(); ++e) value += bivariate[k][e] * pow_big(twisted, e);
        coeffs[k * deg_v] = value;
    }
    return IntPoly(coeffs) == p_herm_place(t, PlaceKind::Inert, q_v, deg_v);
}

IntPoly p_global(const GlobalHermDatum& g) {
    IntPoly out{1};
    for (const auto& p : g.places) {
        if (p.deg_v < 1) throw InputError("place degree must be at least 1");
        const BigInt qv = pow_big(BigInt(g.q), static_cast<unsigned long>(p.deg_v));
        out *= p_herm_place(p.lambda.num_parts(), p.kind, qv, p.deg_v);
    }
    return out;
}

BigInt steinberg_trace(const GlobalHermDatum& g) {
    BigInt out = 1;
    for (const auto& p : g.places) {
        for (int part : p.lambda.parts())
            if (part != 1) throw NotSemisimple("Jordan type " + p.lambda.to_string() + " is not semisimple");
        const int dv = p.lambda.num_parts();
        const BigInt qv = pow_big(BigInt(g.q), static_cast<unsigned long>(p.deg_v));
        out *= pow_big(qv, static_cast<unsigned long>(dv) * (dv - 1) / 2);
        if ((static_cast<long>(p.deg_v - 1) * dv) % 2 != 0) out = -out;
    }
    return out;
}

}  // namespace swkit
