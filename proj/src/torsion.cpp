#include "swkit/torsion.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "swkit/errors.hpp"
#include "swkit/guards.hpp"

namespace swkit {

namespace {

// Row echelon helpers over K. Rows are fully reduced with pivot entry 1.
struct Echelon {
    const FiniteField* f;
    std::vector<Vec> rows;
    std::vector<int> pivots;

    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const FieldElem c = v[pivots[r]];
            if (c.code == 0) continue;
            const FieldElem nc = f->neg(c);
            const Vec& row = rows[r];
            for (std::size_t j = pivots[r]; j < v.size(); ++j)
                if (row[j].code != 0) v[j] = f->add(v[j], f->mul(nc, row[j]));
        }
        return v;
    }

    bool insert(const Vec& v0) {
        Vec v = reduce(v0);
        int p = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j].code != 0) {
                p = static_cast<int>(j);
                break;
            }
        if (p < 0) return false;
        const FieldElem inv = f->inv(v[p]);
        for (auto& x : v) x = f->mul(inv, x);
        for (auto& row : rows) {
            const FieldElem c = row[p];
            if (c.code == 0) continue;
            const FieldElem nc = f->neg(c);
            for (std::size_t j = p; j < row.size(); ++j)
                if (v[j].code != 0) row[j] = f->add(row[j], f->mul(nc, v[j]));
        }
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, p);
        return true;
    }

    Submodule to_submodule() const { return {rows, pivots}; }
};

Echelon echelon_of(const FiniteField& f, const Submodule& s) { return {&f, s.basis, s.pivots}; }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElem a) { return a.code == 0; });
}

// Basis of {x : sum_j row[j] x_j = 0 for every constraint row}.
std::vector<Vec> nullspace(const FiniteField& f, const std::vector<Vec>& constraints, int n) {
    Echelon e{&f, {}, {}};
    for (const auto& c : constraints) e.insert(c);
    std::vector<char> is_pivot(n, 0);
    for (int p : e.pivots) is_pivot[p] = 1;
    std::vector<Vec> out;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec x(n, FieldElem{0});
        x[free] = f.one();
        for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = f.neg(e.rows[r][free]);
        out.push_back(std::move(x));
    }
    return out;
}

BigInt field_power(const FiniteField& f, int k) { return pow_big(BigInt(f.size()), static_cast<unsigned long>(k)); }

void check_module_guard(const HermTorsionModule& m) {
    if (m.cardinality() > BigInt(static_cast<unsigned long>(scaled_guard(GuardDefaults::kModuleSize))))
        throw GuardExceeded("module of type " + m.lambda().to_string() + " has " + to_decimal(m.cardinality()) + " elements");
}

}  // namespace

HermTorsionModule::HermTorsionModule(ModulePicture picture, long q, Partition lambda)
    : picture_(picture), q_(q), lambda_(std::move(lambda)) {
    auto pp = factor_prime_power(q);
    if (picture_ == ModulePicture::Inert) {
        if (pp.p == 2) throw InputError("inert places require odd q");
        if (2 * pp.e > FiniteField::kMaxDegree) throw GuardExceeded("residue field F_{q^2} with q=" + std::to_string(q) + " is too large");
        field_ = FiniteField::get(pp.p, 2 * pp.e);
        sigma_.resize(field_->size());
        for (std::uint32_t a = 0; a < field_->size(); ++a) sigma_[a] = field_->frobenius({a}, pp.e);
    } else {
        field_ = FiniteField::get(pp.p, pp.e);
    }
    int off = 0;
    for (int part : lambda_.parts()) {
        offset_.push_back(off);
        off += part;
    }
    half_ = off;
    dim_ = picture_ == ModulePicture::SplitPair ? 2 * half_ : half_;
}

BigInt HermTorsionModule::cardinality() const { return field_power(*field_, dim_); }

int HermTorsionModule::pairing_width() const {
    if (!has_pairing()) throw InputError("the collapsed split picture carries no pairing");
    return picture_ == ModulePicture::SplitPair ? 2 * lambda_.largest() : lambda_.largest();
}

void HermTorsionModule::check(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw RingMismatch("vector length does not match the module");
}

int HermTorsionModule::slot(int block, int power, int component) const {
    if (block < 0 || block >= lambda_.num_parts() || power < 0 || power >= lambda_.parts()[block])
        throw IndexOutOfRange("module slot out of range");
    if (component < 0 || component > (picture_ == ModulePicture::SplitPair ? 1 : 0)) throw IndexOutOfRange("component out of range");
    return component * half_ + offset_[block] + power;
}

Vec HermTorsionModule::basis_vec(int s) const {
    if (s < 0 || s >= dim_) throw IndexOutOfRange("slot out of range");
    Vec v = zero_vec();
    v[s] = field_->one();
    return v;
}

int HermTorsionModule::component_of_slot(int s) const { return s >= half_ ? 1 : 0; }

Vec HermTorsionModule::add(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    Vec out(dim_);
    for (int j = 0; j < dim_; ++j) out[j] = field_->add(x[j], y[j]);
    return out;
}

Vec HermTorsionModule::scale(FieldElem a, const Vec& x) const {
    check(x);
    Vec out(dim_);
    for (int j = 0; j < dim_; ++j) out[j] = field_->mul(a, x[j]);
    return out;
}

Vec HermTorsionModule::t_times(const Vec& x) const {
    check(x);
    Vec out = zero_vec();
    const int comps = picture_ == ModulePicture::SplitPair ? 2 : 1;
    for (int c = 0; c < comps; ++c)
        for (int b = 0; b < lambda_.num_parts(); ++b) {
            const int base = c * half_ + offset_[b];
            for (int k = 0; k + 1 < lambda_.parts()[b]; ++k) out[base + k + 1] = x[base + k];
        }
    return out;
}

Vec HermTorsionModule::project(const Vec& x, int component) const {
    check(x);
    if (picture_ != ModulePicture::SplitPair) return x;
    Vec out = zero_vec();
    for (int j = 0; j < dim_; ++j)
        if (component_of_slot(j) == component) out[j] = x[j];
    return out;
}

std::vector<Vec> HermTorsionModule::pairing_rows(const Vec& y) const {
    check(y);
    const int l1 = lambda_.largest();
    std::vector<Vec> rows(pairing_width(), zero_vec());
    for (int b = 0; b < lambda_.num_parts(); ++b) {
        const int len = lambda_.parts()[b];
        const int shift = l1 - len;
        for (int m = shift; m < l1; ++m)
            for (int a = 0; a <= m - shift; ++a) {
                const int bb = m - shift - a;
                if (picture_ == ModulePicture::Inert) {
                    const FieldElem yv = y[offset_[b] + bb];
                    if (yv.code != 0) rows[m][offset_[b] + a] = field_->add(rows[m][offset_[b] + a], sigma_[yv.code]);
                } else {
                    // first coordinate pairs Q1 against Q2, second pairs Q2 against Q1
                    const int s1 = offset_[b], s2 = half_ + offset_[b];
                    rows[m][s1 + a] = field_->add(rows[m][s1 + a], y[s2 + bb]);
                    rows[l1 + m][s2 + a] = field_->add(rows[l1 + m][s2 + a], y[s1 + bb]);
                }
            }
    }
    return rows;
}

Vec HermTorsionModule::pairing(const Vec& x, const Vec& y) const {
    check(x);
    auto rows = pairing_rows(y);
    Vec out(rows.size(), FieldElem{0});
    for (std::size_t m = 0; m < rows.size(); ++m)
        for (int j = 0; j < dim_; ++j)
            if (rows[m][j].code != 0 && x[j].code != 0) out[m] = field_->add(out[m], field_->mul(rows[m][j], x[j]));
    return out;
}

Vec HermTorsionModule::sigma_value(const Vec& v) const {
    if (static_cast<int>(v.size()) != pairing_width()) throw RingMismatch("pairing value has the wrong width");
    Vec out = v;
    if (picture_ == ModulePicture::Inert) {
        for (auto& a : out) a = sigma_[a.code];
    } else {
        const std::size_t l1 = v.size() / 2;
        std::rotate(out.begin(), out.begin() + static_cast<long>(l1), out.end());
    }
    return out;
}

std::uint64_t HermTorsionModule::encode(const Vec& x) const {
    check(x);
    if (cardinality() > BigInt(UINT64_MAX)) throw GuardExceeded("module too large to encode");
    std::uint64_t code = 0;
    for (int j = dim_ - 1; j >= 0; --j) code = code * field_->size() + x[j].code;
    return code;
}

Vec HermTorsionModule::decode(std::uint64_t code) const {
    Vec v = zero_vec();
    for (int j = 0; j < dim_; ++j) {
        v[j] = {static_cast<std::uint32_t>(code % field_->size())};
        code /= field_->size();
    }
    return v;
}

std::string Submodule::key() const {
    std::string out;
    out.reserve(basis.size() * (basis.empty() ? 0 : basis[0].size()) * 2 + 1);
    out.push_back(static_cast<char>(basis.size()));
    for (const auto& row : basis)
        for (auto a : row) {
            out.push_back(static_cast<char>(a.code >> 8));
            out.push_back(static_cast<char>(a.code & 0xff));
        }
    return out;
}

Submodule zero_submodule(const HermTorsionModule&) { return {}; }

Submodule whole_module(const HermTorsionModule& m) {
    Submodule s;
    for (int j = 0; j < m.dim(); ++j) {
        s.basis.push_back(m.basis_vec(j));
        s.pivots.push_back(j);
    }
    return s;
}

Submodule span(const HermTorsionModule& m, const std::vector<Vec>& gens) {
    Echelon e{&m.field(), {}, {}};
    std::deque<Vec> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(v.size()) != m.dim()) throw RingMismatch("generator length does not match the module");
        if (!e.insert(v)) continue;
        queue.push_back(m.t_times(v));
        if (m.picture() == ModulePicture::SplitPair) {
            queue.push_back(m.project(v, 0));
            queue.push_back(m.project(v, 1));
        }
    }
    return e.to_submodule();
}

bool contains(const HermTorsionModule& m, const Submodule& s, const Vec& v) {
    if (static_cast<int>(v.size()) != m.dim()) throw RingMismatch("vector length does not match the module");
    return is_zero(echelon_of(m.field(), s).reduce(v));
}

bool is_subset(const HermTorsionModule& m, const Submodule& a, const Submodule& b) {
    auto e = echelon_of(m.field(), b);
    return std::all_of(a.basis.begin(), a.basis.end(), [&](const Vec& v) { return is_zero(e.reduce(v)); });
}

BigInt cardinality(const HermTorsionModule& m, const Submodule& s) { return field_power(m.field(), s.dim()); }

std::vector<Vec> elements(const HermTorsionModule& m, const Submodule& s) {
    const BigInt total = cardinality(m, s);
    if (total > BigInt(static_cast<unsigned long>(scaled_guard(GuardDefaults::kModuleSize))))
        throw GuardExceeded("submodule has " + to_decimal(total) + " elements");
    const auto n = total.get_ui();
    const auto& f = m.field();
    std::vector<Vec> out;
    out.reserve(n);
    for (unsigned long code = 0; code < n; ++code) {
        Vec v = m.zero_vec();
        unsigned long c = code;
        for (const auto& row : s.basis) {
            FieldElem coef{static_cast<std::uint32_t>(c % f.size())};
            c /= f.size();
            if (coef.code != 0) v = m.add(v, m.scale(coef, row));
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [&](const Vec& x, const Vec& y) { return m.encode(x) < m.encode(y); });
    return out;
}

std::vector<Vec> generators(const HermTorsionModule& m, const Submodule& s) {
    Echelon e{&m.field(), {}, {}};
    for (const auto& v : s.basis) e.insert(m.t_times(v));
    std::vector<Vec> out;
    for (const auto& v : s.basis)
        if (e.insert(v)) out.push_back(v);
    return out;
}

namespace {

// Minimal extensions of base: submodules J with base in J and dim J/base = 1.
// Candidates are lines in the socle of M/base (intersected with base^perp and
// restricted to isotropic vectors when requested).
template <class Fn>
void for_each_minimal_extension(const HermTorsionModule& m, const Submodule& base, bool isotropic, Fn&& fn) {
    const auto& f = m.field();
    const int n = m.dim();
    auto be = echelon_of(f, base);

    std::vector<Vec> constraints;
    // t x lies in base
    std::vector<Vec> images(n);
    for (int j = 0; j < n; ++j) images[j] = be.reduce(m.t_times(m.basis_vec(j)));
    for (int k = 0; k < n; ++k) {
        Vec row(n, FieldElem{0});
        bool any = false;
        for (int j = 0; j < n; ++j) {
            row[j] = images[j][k];
            any = any || row[j].code != 0;
        }
        if (any) constraints.push_back(std::move(row));
    }
    if (isotropic)
        for (const auto& b : base.basis)
            for (auto& row : m.pairing_rows(b)) constraints.push_back(std::move(row));

    const int comps = m.picture() == ModulePicture::SplitPair ? 2 : 1;
    for (int comp = 0; comp < comps; ++comp) {
        auto cons = constraints;
        if (comps == 2)
            for (int j = 0; j < n; ++j)
                if (m.component_of_slot(j) != comp) cons.push_back(m.basis_vec(j));
        auto socle = nullspace(f, cons, n);
        Echelon quot{&f, {}, {}};
        for (const auto& v : socle) quot.insert(be.reduce(v));
        const int s = static_cast<int>(quot.rows.size());
        // projective points: leading coefficient 1 at index lead
        for (int lead = 0; lead < s; ++lead) {
            const int rest = s - 1 - lead;
            std::uint64_t count = 1;
            for (int i = 0; i < rest; ++i) count *= f.size();
            for (std::uint64_t code = 0; code < count; ++code) {
                Vec x = quot.rows[lead];
                std::uint64_t c = code;
                for (int i = lead + 1; i < s; ++i) {
                    FieldElem coef{static_cast<std::uint32_t>(c % f.size())};
                    c /= f.size();
                    if (coef.code != 0) x = m.add(x, m.scale(coef, quot.rows[i]));
                }
                if (isotropic && !is_zero(m.pairing(x, x))) continue;
                Echelon j = be;
                j.insert(x);
                fn(j.to_submodule());
            }
        }
    }
}

std::vector<Submodule> bfs(const HermTorsionModule& m, const Submodule& start, bool isotropic) {
    check_module_guard(m);
    if (isotropic && !m.has_pairing()) throw InputError("isotropy needs a Hermitian pairing");
    std::vector<Submodule> out{start};
    std::unordered_set<std::string> seen{start.key()};
    std::vector<Submodule> level{start};
    while (!level.empty()) {
        std::vector<Submodule> next;
        for (const auto& s : level)
            for_each_minimal_extension(m, s, isotropic, [&](Submodule&& j) {
                if (seen.insert(j.key()).second) next.push_back(std::move(j));
            });
        std::sort(next.begin(), next.end(), [](const Submodule& a, const Submodule& b) { return a.key() < b.key(); });
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<Submodule> enumerate_submodules(const HermTorsionModule& m) { return bfs(m, zero_submodule(m), false); }

std::vector<Submodule> enumerate_submodules_containing(const HermTorsionModule& m, const Submodule& base) {
    return bfs(m, base, false);
}

std::vector<Submodule> enumerate_isotropic(const HermTorsionModule& m) { return bfs(m, zero_submodule(m), true); }

bool is_isotropic(const HermTorsionModule& m, const Submodule& s) {
    if (!m.has_pairing()) throw InputError("isotropy needs a Hermitian pairing");
    for (const auto& x : s.basis)
        for (const auto& y : s.basis)
            if (!is_zero(m.pairing(x, y))) return false;
    return true;
}

Submodule orthogonal_complement(const HermTorsionModule& m, const Submodule& s) {
    check_module_guard(m);
    std::vector<Vec> constraints;
    for (const auto& b : s.basis)
        for (auto& row : m.pairing_rows(b)) constraints.push_back(std::move(row));
    Echelon e{&m.field(), {}, {}};
    for (const auto& v : nullspace(m.field(), constraints, m.dim())) e.insert(v);
    return e.to_submodule();
}

bool is_nondegenerate(const HermTorsionModule& m) { return orthogonal_complement(m, whole_module(m)).dim() == 0; }

int generator_count(const HermTorsionModule& m, const Submodule& a, const Submodule& b) {
    auto e = echelon_of(m.field(), a);
    for (const auto& v : b.basis) e.insert(m.t_times(v));
    return b.dim() - static_cast<int>(e.rows.size());
}

QuotientInvariants quotient_invariants(const HermTorsionModule& m, const Submodule& a, const Submodule& b) {
    if (!is_subset(m, a, b)) throw NotASubmodule("quotient_invariants needs A contained in B");
    int ell = b.dim() - a.dim();
    int gens = generator_count(m, a, b);
    if (m.picture() == ModulePicture::SplitPair) {
        if (ell % 2 != 0 || gens % 2 != 0) throw NonIntegralLog("pair-picture quotient has odd length or generator count");
        ell /= 2;
        gens /= 2;
    }
    return {ell, gens};
}

namespace {

// Conjugate of the sequence dim(a + t^{k-1} b) - dim(a + t^k b).
Partition jordan_from_span(const HermTorsionModule& m, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    const auto& f = m.field();
    auto dim_of = [&](const std::vector<Vec>& extra) {
        Echelon e{&f, {}, {}};
        for (const auto& v : a) e.insert(v);
        for (const auto& v : extra) e.insert(v);
        return static_cast<int>(e.rows.size());
    };
    std::vector<int> counts;
    std::vector<Vec> cur = b;
    int prev = dim_of(cur);
    const int floor = dim_of({});
    while (prev > floor) {
        for (auto& v : cur) v = m.t_times(v);
        const int d = dim_of(cur);
        counts.push_back(prev - d);
        prev = d;
    }
    std::vector<int> parts;
    for (int j = 1; !counts.empty() && j <= counts.front(); ++j) {
        int len = 0;
        for (int c : counts)
            if (c >= j) ++len;
        parts.push_back(len);
    }
    return Partition(parts);
}

std::vector<Vec> projected(const HermTorsionModule& m, const Submodule& s, int comp) {
    std::vector<Vec> out;
    for (const auto& v : s.basis) out.push_back(m.project(v, comp));
    return out;
}

}  // namespace

Partition jordan_type(const HermTorsionModule& m, const Submodule& a, const Submodule& b) {
    if (!is_subset(m, a, b)) throw NotASubmodule("jordan_type needs A contained in B");
    if (m.picture() != ModulePicture::SplitPair) return jordan_from_span(m, a.basis, b.basis);
    auto first = jordan_from_span(m, projected(m, a, 0), projected(m, b, 0));
    auto second = jordan_from_span(m, projected(m, a, 1), projected(m, b, 1));
    if (first != second) throw InputError("pair-picture components have different Jordan types");
    return first;
}

Partition jordan_type(const HermTorsionModule& m) { return jordan_type(m, zero_submodule(m), whole_module(m)); }

}  // namespace swkit
