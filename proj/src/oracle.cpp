#include "swkit/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "swkit/errors.hpp"
#include "swkit/density.hpp"
#include "swkit/trunc_ring.hpp"

namespace swkit::oracle {

namespace {

constexpr std::uint64_t kMaxNaiveElements = 20'000;

// Gaussian elimination on a copy; returns the reduced rows (pivot 1) in order.
std::vector<std::vector<std::uint32_t>> rref(const FiniteField& f, std::vector<std::vector<std::uint32_t>> rows) {
    std::vector<std::vector<std::uint32_t>> out;
    if (rows.empty()) return out;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const FieldElem inv = f.inv({rows[r][c]});
        for (auto& x : rows[r]) x = f.mul(inv, {x}).code;
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0) continue;
            const FieldElem factor = f.neg({rows[o][c]});
            for (std::size_t k = 0; k < cols; ++k) rows[o][k] = f.add({rows[o][k]}, f.mul(factor, {rows[r][k]})).code;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::uint64_t exact_log(std::uint64_t value, std::uint64_t base) {
    std::uint64_t k = 0;
    while (value > 1) {
        if (value % base != 0) throw NonIntegralLog("cardinality is not a power of the residue field size");
        value /= base;
        ++k;
    }
    if (value != 1) throw NonIntegralLog("empty set has no logarithm");
    return k;
}

struct Codec {
    const HermTorsionModule& m;
    std::uint64_t size;
    std::vector<Vec> elems;

    explicit Codec(const HermTorsionModule& mod) : m(mod) {
        const BigInt card = m.cardinality();
        if (card > BigInt(static_cast<unsigned long>(kMaxNaiveElements))) throw GuardExceeded("naive enumeration limited to 20000 elements");
        size = card.get_ui();
        elems.reserve(size);
        for (std::uint64_t c = 0; c < size; ++c) elems.push_back(m.decode(c));
    }
    std::uint64_t code(const Vec& v) const { return m.encode(v); }
};

// r . x for r in O'/t^{lambda_1}; pair picture uses (r1, r2) on the two components.
std::vector<std::uint64_t> cyclic_orbit(const Codec& cd, const Vec& x) {
    const auto& m = cd.m;
    const auto& f = m.field();
    const int n = std::max(1, m.lambda().largest());
    std::vector<Vec> powers{x};
    for (int k = 1; k < n; ++k) powers.push_back(m.t_times(powers.back()));
    const int comps = m.picture() == ModulePicture::SplitPair ? 2 : 1;
    std::vector<std::uint64_t> out;
    std::vector<Vec> partial{m.zero_vec()};
    for (int c = 0; c < comps; ++c) {
        std::vector<Vec> next;
        for (const auto& base : partial) {
            // all sums base + sum_k a_k t^k x_c with a_k in K
            std::vector<Vec> acc{base};
            for (int k = 0; k < n; ++k) {
                const Vec term = comps == 2 ? m.project(powers[k], c) : powers[k];
                std::vector<Vec> grown;
                for (const auto& v : acc)
                    for (std::uint32_t a = 0; a < f.size(); ++a) grown.push_back(m.add(v, m.scale({a}, term)));
                acc = std::move(grown);
            }
            next.insert(next.end(), acc.begin(), acc.end());
        }
        partial = std::move(next);
    }
    for (const auto& v : partial) out.push_back(cd.code(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ElementSet join(const Codec& cd, const ElementSet& s, const std::vector<std::uint64_t>& orbit) {
    std::unordered_set<std::uint64_t> seen;
    for (auto a : s)
        for (auto b : orbit) seen.insert(cd.code(cd.m.add(cd.elems[a], cd.elems[b])));
    ElementSet out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_all(const ElementSet& big, const ElementSet& small) { return std::includes(big.begin(), big.end(), small.begin(), small.end()); }

ElementSet t_image_sum(const Codec& cd, const ElementSet& a, const ElementSet& b) {
    std::unordered_set<std::uint64_t> seen;
    for (auto x : a)
        for (auto y : b) seen.insert(cd.code(cd.m.add(cd.elems[x], cd.m.t_times(cd.elems[y]))));
    return {seen.begin(), seen.end()};
}

bool pairing_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElem a) { return a.code == 0; });
}

}  // namespace

std::vector<ElementSet> naive_submodules(const HermTorsionModule& m) {
    Codec cd(m);
    std::set<ElementSet> seen{{0}};
    std::vector<ElementSet> frontier{{0}};
    std::vector<std::vector<std::uint64_t>> orbits(cd.size);
    for (std::uint64_t x = 0; x < cd.size; ++x) orbits[x] = cyclic_orbit(cd, cd.elems[x]);
    while (!frontier.empty()) {
        std::vector<ElementSet> next;
        for (const auto& s : frontier) {
            // x and x + s give the same extension, so one element per coset
            std::vector<char> done(cd.size, 0);
            for (auto e : s) done[e] = 1;
            for (std::uint64_t x = 0; x < cd.size; ++x) {
                if (done[x]) continue;
                for (auto e : s) done[cd.code(cd.m.add(cd.elems[x], cd.elems[e]))] = 1;
                auto j = join(cd, s, orbits[x]);
                if (seen.insert(j).second) next.push_back(std::move(j));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Vec naive_pairing(const HermTorsionModule& m, const Vec& x, const Vec& y) {
    if (!m.has_pairing()) throw InputError("module has no pairing");
    const auto& lam = m.lambda();
    const int l1 = lam.largest();
    TruncRing ring(m.field_ptr(), std::max(1, l1));
    const int frob = m.field().degree() / 2;
    auto poly = [&](const Vec& v, int block, int comp, bool conj) {
        auto p = ring.zero();
        for (int k = 0; k < lam.parts()[block]; ++k) {
            FieldElem a = v[m.slot(block, k, comp)];
            p.c[k] = conj ? m.field().frobenius(a, frob) : a;
        }
        return p;
    };
    auto shift = [&](int block) {
        auto p = ring.one();
        for (int k = 0; k < l1 - lam.parts()[block]; ++k) p = ring.mul(p, ring.uniformizer());
        return p;
    };
    if (m.picture() == ModulePicture::Inert) {
        auto acc = ring.zero();
        for (int b = 0; b < lam.num_parts(); ++b)
            acc = ring.add(acc, ring.mul(shift(b), ring.mul(poly(x, b, 0, false), poly(y, b, 0, true))));
        return acc.c;
    }
    auto first = ring.zero(), second = ring.zero();
    for (int b = 0; b < lam.num_parts(); ++b) {
        first = ring.add(first, ring.mul(shift(b), ring.mul(poly(x, b, 0, false), poly(y, b, 1, false))));
        second = ring.add(second, ring.mul(shift(b), ring.mul(poly(x, b, 1, false), poly(y, b, 0, false))));
    }
    Vec out = first.c;
    out.insert(out.end(), second.c.begin(), second.c.end());
    return out;
}

IntPoly naive_den_local(PlaceKind kind, long q, const Partition& lambda) {
    const auto picture = kind == PlaceKind::Inert ? ModulePicture::Inert : ModulePicture::SplitCollapsed;
    HermTorsionModule m(picture, q, lambda);
    Codec cd(m);
    const std::uint64_t k = m.field().size();
    const auto subs = naive_submodules(m);
    IntPoly out;
    if (kind == PlaceKind::Inert) {
        for (const auto& s : subs) {
            bool iso = true;
            for (std::size_t i = 0; i < s.size() && iso; ++i)
                for (std::size_t j = 0; j < s.size() && iso; ++j) iso = pairing_zero(naive_pairing(m, cd.elems[s[i]], cd.elems[s[j]]));
            if (!iso) continue;
            ElementSet perp;
            for (std::uint64_t z = 0; z < cd.size; ++z) {
                bool ok = true;
                for (auto x : s)
                    if (!pairing_zero(naive_pairing(m, cd.elems[z], cd.elems[x]))) {
                        ok = false;
                        break;
                    }
                if (ok) perp.push_back(z);
            }
            const auto ell = exact_log(s.size(), k);
            const auto tp = exact_log(perp.size() / t_image_sum(cd, s, perp).size(), k);
            out += IntPoly::monomial(1, 2 * ell) * m_poly(static_cast<int>(tp), kind, q);
        }
        return out;
    }
    for (const auto& upper : subs)
        for (const auto& lower : subs) {
            if (!contains_all(upper, lower)) continue;
            const auto ell = exact_log(lower.size(), k) + exact_log(cd.size / upper.size(), k);
            const auto t = exact_log(upper.size() / t_image_sum(cd, lower, upper).size(), k);
            out += IntPoly::monomial(1, ell) * m_poly(static_cast<int>(t), kind, q);
        }
    return out;
}

BigInt brute_isometry_count_split(int m, int n, int a, long q) {
    if (!(0 <= a && a <= n && n <= m)) throw IndexOutOfRange("brute isometry count needs 0 <= a <= n <= m");
    auto f = FiniteField::of_order(q);
    const std::uint64_t cells = static_cast<std::uint64_t>(m) * n;
    std::uint64_t count_mats = 1;
    for (std::uint64_t i = 0; i < cells; ++i) {
        count_mats *= f->size();
        if (count_mats > 100'000) throw GuardExceeded("brute isometry search too large");
    }
    // matrices stored row-major m x n
    std::vector<std::vector<std::uint32_t>> mats;
    std::vector<char> injective;
    for (std::uint64_t code = 0; code < count_mats; ++code) {
        std::vector<std::uint32_t> x(cells);
        std::uint64_t c = code;
        for (auto& v : x) {
            v = static_cast<std::uint32_t>(c % f->size());
            c /= f->size();
        }
        // column rank = rank of the transpose
        std::vector<std::vector<std::uint32_t>> cols(n, std::vector<std::uint32_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) cols[j][i] = x[i * n + j];
        injective.push_back(static_cast<int>(rref(*f, cols).size()) == n);
        mats.push_back(std::move(x));
    }
    BigInt count = 0;
    for (std::uint64_t u = 0; u < count_mats; ++u) {
        if (!injective[u]) continue;
        for (std::uint64_t v = 0; v < count_mats; ++v) {
            if (!injective[v]) continue;
            bool ok = true;
            for (int k = 0; k < n && ok; ++k)
                for (int l = 0; l < n && ok; ++l) {
                    FieldElem acc{0};
                    for (int i = 0; i < m; ++i) acc = f->add(acc, f->mul({mats[u][i * n + k]}, {mats[v][i * n + l]}));
                    const std::uint32_t want = (k == l && k < n - a) ? 1 : 0;
                    ok = acc.code == want;
                }
            if (ok) ++count;
        }
    }
    return count;
}

BigInt brute_grassmannian_count(int t, int j, long q) {
    if (t < 0 || j < 0 || j > t) throw IndexOutOfRange("brute Grassmannian count needs 0 <= j <= t");
    auto f = FiniteField::of_order(q);
    std::uint64_t vecs = 1;
    for (int i = 0; i < t; ++i) vecs *= f->size();
    std::uint64_t tuples = 1;
    for (int i = 0; i < j; ++i) {
        tuples *= vecs;
        if (tuples > 10'000'000) throw GuardExceeded("brute Grassmannian search too large");
    }
    std::set<std::vector<std::vector<std::uint32_t>>> spaces;
    for (std::uint64_t code = 0; code < tuples; ++code) {
        std::vector<std::vector<std::uint32_t>> rows(j, std::vector<std::uint32_t>(t));
        std::uint64_t c = code;
        for (auto& row : rows)
            for (auto& v : row) {
                v = static_cast<std::uint32_t>(c % f->size());
                c /= f->size();
            }
        auto r = rref(*f, rows);
        if (static_cast<int>(r.size()) == j) spaces.insert(std::move(r));
    }
    return static_cast<unsigned long>(spaces.size());
}

}  // namespace swkit::oracle
