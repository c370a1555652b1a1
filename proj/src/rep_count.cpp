#include <algorithm>
#include <cmath>
#include <list>
#include <memory>
#include <mutex>
#include <tuple>

#include "swkit/density.hpp"
#include "swkit/errors.hpp"
#include "swkit/guards.hpp"
#include "swkit/trunc_ring.hpp"

namespace swkit {

namespace {

// Search spaces at most this large are always counted exhaustively.
constexpr std::uint64_t kPreferBrute = 100'000;

void check_pair(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc) {
    m.validate();
    l.validate();
    if (m.q != l.q || m.kind != l.kind) throw RingMismatch("lattices live over different rings");
    if (n_trunc < 1) throw InputError("truncation level must be at least 1");
}

// Returns base^exp, or 0 when it exceeds limit.
std::uint64_t capped_pow(std::uint64_t base, long exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (long i = 0; i < exp; ++i) {
        if (out > limit / base) return 0;
        out *= base;
    }
    return out;
}

std::uint64_t search_space(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc, std::uint64_t limit) {
    const auto q = static_cast<std::uint64_t>(m.q);
    return capped_pow(q, 2L * n_trunc * m.rank() * l.rank(), limit);
}

}  // namespace

BigInt rep_count_brute(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc) {
    check_pair(m, l, n_trunc);
    const auto limit = scaled_guard(GuardDefaults::kRepBruteForce);
    const int rows = m.rank(), cols = l.rank();
    if (rows * cols > 0 && search_space(m, l, n_trunc, limit) == 0) throw GuardExceeded("representation search space exceeds " + std::to_string(limit));

    ExtRing ring(m.kind, m.q, n_trunc);
    const auto& base = ring.base();
    std::vector<ExtElem> elems;
    ring.for_each([&](const ExtElem& x) { elems.push_back(x); });

    auto power_of_t = [&](int v) {
        auto x = base.zero();
        if (v < n_trunc) x.c[v] = base.field().one();
        return ring.embed(x);
    };
    std::vector<ExtElem> g_m, g_l;
    for (int v : m.vals) g_m.push_back(power_of_t(v));
    for (int v : l.vals) g_l.push_back(power_of_t(v));

    // Hermitian condition sum_i sigma(x_ik) g_i x_il = (G_L)_kl; in the split
    // case the two coordinates are the two bilinear conditions.
    const int cells = rows * cols;
    std::vector<std::size_t> idx(cells, 0);
    BigInt count = 0;
    const ExtElem zero = ring.zero();
    while (true) {
        bool ok = true;
        for (int k = 0; k < cols && ok; ++k)
            for (int c = 0; c < cols && ok; ++c) {
                ExtElem acc = zero;
                for (int i = 0; i < rows; ++i) {
                    const auto& xk = elems[idx[i * cols + k]];
                    const auto& xc = elems[idx[i * cols + c]];
                    acc = ring.add(acc, ring.mul(ring.mul(ring.sigma(xk), g_m[i]), xc));
                }
                ok = acc == (k == c ? g_l[k] : zero);
            }
        if (ok) ++count;
        int pos = 0;
        while (pos < cells && ++idx[pos] == elems.size()) idx[pos++] = 0;
        if (pos == cells) break;
    }
    return count;
}

namespace {

// Additive group A of Hermitian (inert) or all (split) n x n matrices over
// the truncated ring, indexed in base p. Each row of a representation
// contributes g x^* x; its distribution is transformed into the character
// group, with values in Z[zeta_p] stored as p nonnegative coordinates on
// 1, zeta, ..., zeta^{p-1}.
struct RowSetup {
    PlaceKind kind;
    long q;
    int n;
    int trunc;
    int p = 0;
    std::uint64_t group_size = 0;
    std::uint64_t row_count = 0;
    int digits = 0;
};

struct TransformKey {
    int kind;
    long q;
    int n;
    int trunc;
    int shift;
    auto operator<=>(const TransformKey&) const = default;
};

using Transform = std::vector<std::uint32_t>;

class TransformCache {
  public:
    std::shared_ptr<const Transform> find(const TransformKey& k) {
        std::lock_guard<std::mutex> lock(mu_);
        for (auto it = entries_.begin(); it != entries_.end(); ++it)
            if (it->first == k) {
                entries_.splice(entries_.begin(), entries_, it);
                return entries_.front().second;
            }
        return nullptr;
    }
    void put(const TransformKey& k, std::shared_ptr<const Transform> t) {
        std::lock_guard<std::mutex> lock(mu_);
        entries_.emplace_front(k, std::move(t));
        while (entries_.size() > kCapacity) entries_.pop_back();
    }

  private:
    static constexpr std::size_t kCapacity = 3;
    std::mutex mu_;
    std::list<std::pair<TransformKey, std::shared_ptr<const Transform>>> entries_;
};

TransformCache& transform_cache() {
    static TransformCache cache;
    return cache;
}

// Truncated polynomial codes: coefficient k of code x is digit k base s.
struct CodeRing {
    FieldPtr field;
    int trunc;
    std::uint32_t s;
    std::uint64_t size;
    std::vector<std::uint32_t> coeffs;  // size * trunc
};

CodeRing make_code_ring(FieldPtr f, int trunc) {
    CodeRing r{f, trunc, f->size(), 1, {}};
    for (int i = 0; i < trunc; ++i) r.size *= r.s;
    r.coeffs.resize(r.size * trunc);
    for (std::uint64_t x = 0; x < r.size; ++x) {
        std::uint64_t c = x;
        for (int i = 0; i < trunc; ++i) {
            r.coeffs[x * trunc + i] = static_cast<std::uint32_t>(c % r.s);
            c /= r.s;
        }
    }
    return r;
}

// Dense addition and multiplication tables of the residue field.
struct FieldTables {
    std::uint32_t s;
    std::vector<std::uint16_t> add, mul;
    explicit FieldTables(const FiniteField& f) : s(f.size()), add(s * s), mul(s * s) {
        for (std::uint32_t a = 0; a < s; ++a)
            for (std::uint32_t b = 0; b < s; ++b) {
                add[a * s + b] = static_cast<std::uint16_t>(f.add({a}, {b}).code);
                mul[a * s + b] = static_cast<std::uint16_t>(f.mul({a}, {b}).code);
            }
    }
};

// t^shift * a * b given coefficient arrays; result code.
std::uint64_t shifted_product(const FieldTables& f, const std::uint32_t* a, const std::uint32_t* b, int trunc, int shift) {
    const std::uint32_t s = f.s;
    std::uint64_t code = 0;
    for (int k = trunc - 1; k >= shift; --k) {
        std::uint32_t acc = 0;
        const int deg = k - shift;
        for (int i = 0; i <= deg; ++i) acc = f.add[acc * s + f.mul[a[i] * s + b[deg - i]]];
        code = code * s + acc;
    }
    for (int k = shift - 1; k >= 0; --k) code = code * s;
    return code;
}

// p = 3: out_k = a + zeta^k b + zeta^{2k} c on redundant coordinates.
void dft3_inplace(Transform& data, int digits) {
    const std::size_t size = data.size() / 3;
    std::uint32_t* d = data.data();
    std::size_t stride = 1;
    for (int level = 0; level < digits; ++level) {
        const std::size_t block = stride * 3;
        for (std::size_t base = 0; base < size; base += block)
            for (std::size_t off = 0; off < stride; ++off) {
                std::uint32_t* a = d + (base + off) * 3;
                std::uint32_t* b = a + stride * 3;
                std::uint32_t* c = b + stride * 3;
                const std::uint32_t a0 = a[0], a1 = a[1], a2 = a[2];
                const std::uint32_t b0 = b[0], b1 = b[1], b2 = b[2];
                const std::uint32_t c0 = c[0], c1 = c[1], c2 = c[2];
                a[0] = a0 + b0 + c0;
                a[1] = a1 + b1 + c1;
                a[2] = a2 + b2 + c2;
                b[0] = a0 + b2 + c1;
                b[1] = a1 + b0 + c2;
                b[2] = a2 + b1 + c0;
                c[0] = a0 + b1 + c2;
                c[1] = a1 + b2 + c0;
                c[2] = a2 + b0 + c1;
            }
        stride = block;
    }
}

void dft_inplace(Transform& data, int p, int digits) {
    if (p == 3) return dft3_inplace(data, digits);
    const std::size_t size = data.size() / p;
    std::vector<std::uint32_t> in(static_cast<std::size_t>(p) * p), out(static_cast<std::size_t>(p) * p);
    std::size_t stride = 1;
    for (int d = 0; d < digits; ++d) {
        const std::size_t block = stride * p;
        for (std::size_t base = 0; base < size; base += block)
            for (std::size_t off = 0; off < stride; ++off) {
                for (int j = 0; j < p; ++j)
                    std::copy_n(&data[(base + off + j * stride) * p], p, &in[j * p]);
                std::fill(out.begin(), out.end(), 0u);
                for (int k = 0; k < p; ++k)
                    for (int j = 0; j < p; ++j) {
                        const int rot = (j * k) % p;
                        const std::uint32_t* src = &in[j * p];
                        std::uint32_t* dst = &out[k * p];
                        // multiply by zeta^{rot}: coordinate c moves to c + rot
                        for (int c = 0; c < p; ++c) dst[(c + rot) % p] += src[c];
                    }
                for (int k = 0; k < p; ++k) std::copy_n(&out[k * p], p, &data[(base + off + k * stride) * p]);
            }
        stride = block;
    }
}

std::shared_ptr<const Transform> build_transform(const RowSetup& setup, int shift) {
    TransformKey key{static_cast<int>(setup.kind), setup.q, setup.n, setup.trunc, shift};
    if (auto hit = transform_cache().find(key)) return hit;

    const int n = setup.n, p = setup.p;
    auto data = std::make_shared<Transform>(setup.group_size * p, 0u);
    auto pp = factor_prime_power(setup.q);
    auto fq = FiniteField::get(pp.p, pp.e);
    CodeRing base = make_code_ring(fq, setup.trunc);

    if (setup.kind == PlaceKind::Inert) {
        ExtRing ext(PlaceKind::Inert, setup.q, setup.trunc);
        auto fq2 = FiniteField::get(pp.p, 2 * pp.e);
        CodeRing big = make_code_ring(fq2, setup.trunc);
        const FieldTables t2(*fq2);
        std::vector<std::int64_t> restrict(fq2->size(), -1);
        for (std::uint32_t a = 0; a < fq->size(); ++a) restrict[ext.embed_scalar({a}).code] = a;
        std::vector<std::uint32_t> sig(big.size * setup.trunc);
        for (std::size_t i = 0; i < sig.size(); ++i) sig[i] = ext.sigma_scalar({big.coeffs[i]}).code;
        // t^shift N(x) as a code of the fixed ring
        std::vector<std::uint64_t> norm(big.size);
        for (std::uint64_t x = 0; x < big.size; ++x) {
            const std::uint64_t c2 = shifted_product(t2, &sig[x * setup.trunc], &big.coeffs[x * setup.trunc], setup.trunc, shift);
            std::uint64_t c1 = 0, rest = c2, mult = 1;
            for (int k = 0; k < setup.trunc; ++k) {
                const auto r = restrict[rest % big.s];
                if (r < 0) throw Error("norm left the fixed field");
                c1 += static_cast<std::uint64_t>(r) * mult;
                mult *= base.s;
                rest /= big.s;
            }
            norm[x] = c1;
        }
        // layout: n diagonal entries (fixed ring), then pairs k < l (extension ring)
        std::vector<std::uint64_t> stride_diag(n), stride_off(n * n, 0);
        std::uint64_t st = 1;
        for (int k = 0; k < n; ++k) {
            stride_diag[k] = st;
            st *= base.size;
        }
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                stride_off[k * n + l] = st;
                st *= big.size;
            }
        std::vector<std::uint64_t> row(n, 0);
        for (std::uint64_t r = 0; r < setup.row_count; ++r) {
            std::uint64_t index = 0;
            for (int k = 0; k < n; ++k) index += norm[row[k]] * stride_diag[k];
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    index += shifted_product(t2, &sig[row[k] * setup.trunc], &big.coeffs[row[l] * setup.trunc], setup.trunc, shift) *
                             stride_off[k * n + l];
            ++(*data)[index * p];
            for (int k = 0; k < n && ++row[k] == big.size; ++k) row[k] = 0;
        }
    } else {
        // rows are pairs (a, b) of vectors; contribution t^shift a_k b_l for all k, l
        const FieldTables t1(*fq);
        const bool table = base.size * base.size <= (1u << 24);
        std::vector<std::uint64_t> prod;
        if (table) {
            prod.resize(base.size * base.size);
            for (std::uint64_t a = 0; a < base.size; ++a)
                for (std::uint64_t b = 0; b < base.size; ++b)
                    prod[a * base.size + b] =
                        shifted_product(t1, &base.coeffs[a * setup.trunc], &base.coeffs[b * setup.trunc], setup.trunc, shift);
        }
        auto mul = [&](std::uint64_t a, std::uint64_t b) {
            if (table) return prod[a * base.size + b];
            return shifted_product(t1, &base.coeffs[a * setup.trunc], &base.coeffs[b * setup.trunc], setup.trunc, shift);
        };
        std::vector<std::uint64_t> stride(n * n);
        std::uint64_t st = 1;
        for (int e = 0; e < n * n; ++e) {
            stride[e] = st;
            st *= base.size;
        }
        std::vector<std::uint64_t> row(2 * n, 0);
        for (std::uint64_t r = 0; r < setup.row_count; ++r) {
            std::uint64_t index = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) index += mul(row[k], row[n + l]) * stride[k * n + l];
            ++(*data)[index * p];
            for (int k = 0; k < 2 * n && ++row[k] == base.size; ++k) row[k] = 0;
        }
    }
    dft_inplace(*data, p, setup.digits);
    std::shared_ptr<const Transform> out = data;
    transform_cache().put(key, out);
    return out;
}

using Cyc = std::vector<__int128>;

void cyc_mul(Cyc& acc, const std::uint32_t* v, int p, Cyc& tmp) {
    std::fill(tmp.begin(), tmp.end(), 0);
    for (int a = 0; a < p; ++a) {
        if (acc[a] == 0) continue;
        for (int b = 0; b < p; ++b)
            if (v[b] != 0) tmp[(a + b) % p] += acc[a] * static_cast<__int128>(v[b]);
    }
    acc.swap(tmp);
}

BigInt from_int128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt out = 0;
    BigInt scale = 1;
    while (u > 0) {
        out += scale * BigInt(static_cast<unsigned long>(u & 0xffffffffu));
        scale <<= 32;
        u >>= 32;
    }
    return neg ? BigInt(-out) : out;
}

}  // namespace

BigInt rep_count_fourier(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc) {
    check_pair(m, l, n_trunc);
    const int n = l.rank();
    if (n == 0) return 1;
    auto pp = factor_prime_power(m.q);
    RowSetup setup{m.kind, m.q, n, n_trunc};
    setup.p = pp.p;
    setup.digits = pp.e * n_trunc * n * n;
    const auto limit = scaled_guard(GuardDefaults::kRepCharacterGroup);
    setup.group_size = capped_pow(static_cast<std::uint64_t>(pp.p), setup.digits, limit);
    setup.row_count = capped_pow(static_cast<std::uint64_t>(m.q), 2L * n_trunc * n, std::min<std::uint64_t>(limit, UINT32_MAX));
    if (setup.group_size == 0 || setup.row_count == 0) throw GuardExceeded("character group for rank " + std::to_string(n) + " at N=" + std::to_string(n_trunc));

    // |sum| <= |A| * p^{m-1} * rows^m must fit in 126 bits
    const double bits = std::log2(static_cast<double>(setup.group_size)) + m.rank() * std::log2(static_cast<double>(setup.row_count)) +
                        (m.rank() - 1) * std::log2(static_cast<double>(pp.p)) + 1;
    if (bits >= 126) throw GuardExceeded("character sum exceeds 128-bit accumulator");

    std::vector<std::shared_ptr<const Transform>> factors;
    for (int v : m.vals) factors.push_back(build_transform(setup, std::min(v, n_trunc)));

    // Nonzero base-p digits of the target Gram matrix.
    std::vector<std::pair<std::uint64_t, int>> target;  // (p^position, digit)
    {
        auto fq = FiniteField::get(pp.p, pp.e);
        std::uint64_t fixed_size = 1;
        for (int i = 0; i < n_trunc; ++i) fixed_size *= fq->size();
        std::uint64_t index = 0, st = 1;
        for (int k = 0; k < n; ++k) {
            std::uint64_t code = 0;
            if (l.vals[k] < n_trunc) {
                code = 1;
                for (int i = 0; i < l.vals[k]; ++i) code *= fq->size();
            }
            const std::uint64_t diag_stride = m.kind == PlaceKind::Inert ? st : capped_pow(fixed_size, k * n + k, UINT64_MAX);
            index += code * diag_stride;
            if (m.kind == PlaceKind::Inert) st *= fixed_size;
        }
        std::uint64_t place = 1;
        for (int dgt = 0; dgt < setup.digits; ++dgt) {
            const int digit = static_cast<int>(index % pp.p);
            if (digit != 0) target.emplace_back(place, digit);
            index /= pp.p;
            place *= pp.p;
        }
    }

    const int p = setup.p;
    Cyc total(p, 0), acc(p, 0), tmp(p, 0);
    if (p == 3) {
        __int128 t0 = 0, t1 = 0, t2 = 0;
        for (std::uint64_t y = 0; y < setup.group_size; ++y) {
            int dot = 0;
            for (const auto& [place, digit] : target) dot += static_cast<int>((y / place) % 3) * digit;
            __int128 r[3] = {0, 0, 0};
            r[(3 - dot % 3) % 3] = 1;
            for (const auto& f : factors) {
                const std::uint32_t* v = &(*f)[y * 3];
                const __int128 v0 = v[0], v1 = v[1], v2 = v[2];
                const __int128 n0 = r[0] * v0 + r[1] * v2 + r[2] * v1;
                const __int128 n1 = r[0] * v1 + r[1] * v0 + r[2] * v2;
                const __int128 n2 = r[0] * v2 + r[1] * v1 + r[2] * v0;
                r[0] = n0;
                r[1] = n1;
                r[2] = n2;
            }
            t0 += r[0];
            t1 += r[1];
            t2 += r[2];
        }
        total = {t0, t1, t2};
    }
    for (std::uint64_t y = 0; p != 3 && y < setup.group_size; ++y) {
        int dot = 0;
        for (const auto& [place, digit] : target) dot += static_cast<int>((y / place) % p) * digit;
        std::fill(acc.begin(), acc.end(), 0);
        acc[(p - dot % p) % p] = 1;
        for (const auto& f : factors) cyc_mul(acc, &(*f)[y * p], p, tmp);
        for (int c = 0; c < p; ++c) total[c] += acc[c];
    }
    for (int c = 2; c < p; ++c)
        if (total[c] != total[1]) throw Error("character sum is not rational");
    const BigInt value = from_int128(total[0] - (p > 1 ? total[1] : 0));
    BigInt count, rem;
    const BigInt group(static_cast<unsigned long>(setup.group_size));
    mpz_tdiv_qr(count.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), group.get_mpz_t());
    if (rem != 0 || count < 0) throw Error("character sum is not a multiple of the group order");
    return count;
}

BigInt rep_count(const DiagonalLattice& m, const DiagonalLattice& l, int n_trunc) {
    check_pair(m, l, n_trunc);
    if (l.rank() == 0) return 1;
    const auto brute_limit = scaled_guard(GuardDefaults::kRepBruteForce);
    const auto space = search_space(m, l, n_trunc, brute_limit);
    if (space != 0 && space <= kPreferBrute) return rep_count_brute(m, l, n_trunc);
    try {
        return rep_count_fourier(m, l, n_trunc);
    } catch (const GuardExceeded&) {
        if (space != 0) return rep_count_brute(m, l, n_trunc);
        throw;
    }
}

}  // namespace swkit
