#include "swkit/density.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "swkit/errors.hpp"
#include "swkit/torsion.hpp"

namespace swkit {

int GlobalHermDatum::d() const {
    int total = 0;
    for (const auto& p : places) total += p.deg_v * p.lambda.size();
    return total;
}

void GlobalHermDatum::validate() const {
    auto pp = factor_prime_power(q);
    if (pp.p == 2) throw InputError("q must be odd");
    if (n < 1) throw InputError("rank n must be at least 1");
    for (const auto& p : places)
        if (p.deg_v < 1) throw InputError("place degree must be at least 1");
}

std::string GlobalHermDatum::to_string() const {
    std::ostringstream os;
    os << "q=" << q << " n=" << n << " [";
    for (std::size_t i = 0; i < places.size(); ++i)
        os << (i ? ", " : "") << swkit::to_string(places[i].kind) << "/deg" << places[i].deg_v << places[i].lambda;
    os << "]";
    return os.str();
}

IntPoly m_poly(int a, PlaceKind kind, const BigInt& q_v) {
    if (a < 0) throw InputError("m_poly needs a >= 0");
    const BigInt base = eta(kind) * q_v;
    IntPoly out{1};
    BigInt power = 1;
    for (int i = 0; i < a; ++i) {
        out *= IntPoly(std::vector<BigInt>{BigInt(1), BigInt(-power)});
        power *= base;
    }
    return out;
}

namespace {

void check_hermitian_q(long q) {
    auto pp = factor_prime_power(q);
    if (pp.p == 2) throw InputError("Hermitian data require odd q");
}

IntPoly den_inert(long q, const Partition& lambda) {
    HermTorsionModule m(ModulePicture::Inert, q, lambda);
    IntPoly out;
    for (const auto& iso : enumerate_isotropic(m)) {
        auto perp = orthogonal_complement(m, iso);
        auto inv = quotient_invariants(m, swkit::zero_submodule(m), iso);
        const int tp = generator_count(m, iso, perp);
        out += IntPoly::monomial(1, 2 * inv.ell_prime) * m_poly(tp, PlaceKind::Inert, q);
    }
    return out;
}

// sum over submodules I1 of a module of type mu: T^{dim I1} m(t(M/I1))
IntPoly lower_chain_sum(long q, const Partition& mu) {
    HermTorsionModule m(ModulePicture::SplitCollapsed, q, mu);
    const auto top = whole_module(m);
    IntPoly out;
    for (const auto& s : enumerate_submodules(m))
        out += IntPoly::monomial(1, s.dim()) * m_poly(generator_count(m, s, top), PlaceKind::Split, q);
    return out;
}

IntPoly den_split(long q, const Partition& lambda) {
    HermTorsionModule m(ModulePicture::SplitCollapsed, q, lambda);
    std::map<Partition, IntPoly> inner;
    const int total = lambda.size();
    const auto zero = zero_submodule(m);
    IntPoly out;
    for (const auto& upper : enumerate_submodules(m)) {
        auto mu = jordan_type(m, zero, upper);
        auto it = inner.find(mu);
        if (it == inner.end()) it = inner.emplace(mu, lower_chain_sum(q, mu)).first;
        out += IntPoly::monomial(1, total - upper.dim()) * it->second;
    }
    return out;
}

}  // namespace

IntPoly den_local(PlaceKind kind, long q_v, const Partition& lambda) {
    check_hermitian_q(q_v);
    using Key = std::tuple<int, long, std::vector<int>>;
    static std::mutex mu;
    static std::map<Key, IntPoly> cache;
    Key key{static_cast<int>(kind), q_v, lambda.parts()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    IntPoly value = kind == PlaceKind::Inert ? den_inert(q_v, lambda) : den_split(q_v, lambda);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

IntPoly den_local_split_pair_picture(long q_v, const Partition& lambda) {
    check_hermitian_q(q_v);
    HermTorsionModule m(ModulePicture::SplitPair, q_v, lambda);
    IntPoly out;
    for (const auto& iso : enumerate_isotropic(m)) {
        auto perp = orthogonal_complement(m, iso);
        const int gens = generator_count(m, iso, perp);
        if (gens % 2 != 0) throw NonIntegralLog("odd generator count of I^perp / I in the pair picture");
        // the O-length dim(I) equals 2 l'(I)
        out += IntPoly::monomial(1, iso.dim()) * m_poly(gens / 2, PlaceKind::Split, q_v);
    }
    return out;
}

IntPoly den_global(const GlobalHermDatum& g) {
    g.validate();
    IntPoly out{1};
    for (const auto& p : g.places) {
        const BigInt qv = pow_big(BigInt(g.q), static_cast<unsigned long>(p.deg_v));
        if (!qv.fits_slong_p()) throw GuardExceeded("q^deg(v) too large");
        out *= den_local(p.kind, qv.get_si(), p.lambda).substitute_power(p.deg_v);
    }
    return out;
}

Rational den_selfdual(int n, int j, PlaceKind kind, long q) {
    if (n < 0 || j < 0) throw InputError("den_selfdual needs n, j >= 0");
    const Rational base(BigInt(eta(kind) * q));
    Rational out(1);
    for (int i = 1; i <= n; ++i) out *= Rational(1) - base.pow(-(i + j));
    return out;
}

bool functional_equation_check(PlaceKind kind, long q_v, const Partition& lambda) {
    const auto den = den_local(kind, q_v, lambda);
    return reverse_with_sign(den, lambda.size(), eta(kind)) == den;
}

int DiagonalLattice::max_val() const {
    int out = 0;
    for (int v : vals) out = std::max(out, v);
    return out;
}

Partition DiagonalLattice::jordan_type() const { return Partition::from_unsorted(vals); }

void DiagonalLattice::validate() const {
    check_hermitian_q(q);
    for (int v : vals)
        if (v < 0) throw InputError("lattice valuations must be non-negative");
}

std::string DiagonalLattice::to_string() const {
    std::ostringstream os;
    os << swkit::to_string(kind) << " q=" << q << " <";
    for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << "t^" << vals[i];
    os << ">";
    return os.str();
}

Rational density_ratio(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc) {
    const long big_n = m.rank(), small_n = l.rank();
    const long exp = static_cast<long>(n_trunc) * small_n * (2 * big_n - small_n);
    return Rational(rep_count(m, l, n_trunc)) / Rational(pow_big(BigInt(m.q), static_cast<unsigned long>(exp)));
}

DensityResult density_oracle(const DiagonalLattice& m, const DiagonalLattice& l, int n_max) {
    if (m.q != l.q || m.kind != l.kind) throw RingMismatch("lattices live over different rings");
    if (l.rank() > m.rank()) throw InputError("rank of L exceeds rank of M");
    DensityResult res;
    res.first_n = l.max_val() + 1;
    for (int n = res.first_n; n <= n_max; ++n) {
        res.ratios.push_back(density_ratio(m, l, n));
        const auto k = res.ratios.size();
        if (k >= 2 && res.ratios[k - 1] == res.ratios[k - 2]) {
            res.value = res.ratios.back();
            res.stabilized_at = n - 1;
            return res;
        }
    }
    throw NotStabilized("density of " + l.to_string() + " did not stabilize by N=" + std::to_string(n_max));
}

CyReport verify_cy(const DiagonalLattice& l, int j, int n_max) {
    l.validate();
    if (j < 0) throw InputError("j must be non-negative");
    CyReport rep;
    rep.lattice = l;
    rep.j = j;
    const int n = l.rank();
    auto m = DiagonalLattice::unimodular(l.q, l.kind, n + j);
    const Rational t_value = Rational(BigInt(eta(l.kind) * l.q)).pow(-j);
    rep.lhs = den_local(l.kind, l.q, l.jordan_type()).eval(t_value);
    auto dens = density_oracle(m, l, n_max);
    rep.density = dens.value;
    rep.stabilized_at = dens.stabilized_at;
    rep.selfdual = den_selfdual(n, j, l.kind, l.q);
    rep.rhs = rep.density / rep.selfdual;
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

BigInt isom_count_split(int m, int n, int a, long q) {
    if (!(0 <= a && a <= n && n <= m)) throw IndexOutOfRange("isom_count_split needs 0 <= a <= n <= m");
    if (q < 2) throw InputError("q must be at least 2");
    const Rational qq{BigInt(q)};
    Rational out = qq.pow(static_cast<long>(m) * m - static_cast<long>(m - n) * (m - n));
    for (int i = 0; i < n + a; ++i) out *= Rational(1) - qq.pow(i - m);
    if (!out.is_integer()) throw Error("isometry count is not integral");
    return out.numerator();
}

}  // namespace swkit
