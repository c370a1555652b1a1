#include "swkit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>

#include "swkit/errors.hpp"
#include "swkit/guards.hpp"

namespace swkit {

namespace {

std::uint64_t group_order(int d) {
    std::uint64_t out = 1;
    for (int i = 1; i <= d; ++i) out *= 2 * static_cast<std::uint64_t>(i);
    return out;
}

std::uint64_t perm_key(const SignedPerm& g) {
    const int d = g.degree();
    std::uint64_t key = 0;
    for (int i = d - 1; i >= 0; --i) {
        const int v = g.img[i];
        key = key * (2 * d) + (v > 0 ? v - 1 : d - v - 1);
    }
    return key;
}

void check_rank(int d) {
    if (d < 0) throw InputError("rank must be non-negative");
    const std::uint64_t limit = scaled_guard(group_order(GuardDefaults::kWeylRank));
    if (d > 20 || group_order(d) > limit) throw GuardExceeded("W_" + std::to_string(d) + " is above the group-order limit");
}

// Sign of the underlying permutation of y on [start, start + size).
int block_sign_bar(const SignedPerm& y, int start, int size) {
    std::vector<char> seen(size, 0);
    int cycles = 0;
    for (int i = 0; i < size; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = std::abs(y.img[start + j]) - 1 - start) seen[j] = 1;
    }
    return (size - cycles) % 2 ? -1 : 1;
}

int block_chi(const SignedPerm& y, int start, int size) {
    int s = 1;
    for (int i = start; i < start + size; ++i)
        if (y.img[i] < 0) s = -s;
    return s;
}

bool block_member(const SignedPerm& y, int start, int size, bool signs_allowed) {
    for (int i = start; i < start + size; ++i) {
        const int v = y.img[i];
        const int j = std::abs(v) - 1;
        if (j < start || j >= start + size) return false;
        if (!signs_allowed && v < 0) return false;
    }
    return true;
}

SignedPerm restrict_block(const SignedPerm& y, int start, int size) {
    SignedPerm out;
    out.img.resize(size);
    for (int i = 0; i < size; ++i) {
        const int v = y.img[start + i];
        out.img[i] = v > 0 ? v - start : v + start;
    }
    return out;
}

// Shared tail of both induction routines: weights[k] = phi(elements[k]) on H, 0 off H.
ClassFunction induce_weights(const WeylGroup& g, const std::vector<long>& weights, long h_order) {
    ClassFunction out;
    out.d = g.d();
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
        long total = 0;
        for (auto idx : g.conjugates(static_cast<int>(c))) total += weights[idx];
        if (total % h_order != 0) throw Error("induced character value is not an integer");
        out.values[g.classes()[c]] = total / h_order;
    }
    return out;
}

long factorial(int n) {
    long out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

std::mutex registry_mutex;
std::set<int> verified_ranks;

}  // namespace

SignedPerm SignedPerm::identity(int d) {
    SignedPerm out;
    out.img.resize(d);
    std::iota(out.img.begin(), out.img.end(), 1);
    return out;
}

SignedPerm SignedPerm::operator*(const SignedPerm& b) const {
    if (degree() != b.degree()) throw InputError("signed permutations of different degree");
    SignedPerm out;
    out.img.resize(b.img.size());
    for (std::size_t i = 0; i < b.img.size(); ++i) {
        const int v = b.img[i];
        out.img[i] = v > 0 ? img[v - 1] : -img[-v - 1];
    }
    return out;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm out;
    out.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const int v = img[i];
        const int sign = v > 0 ? 1 : -1;
        out.img[std::abs(v) - 1] = sign * static_cast<int>(i + 1);
    }
    return out;
}

std::string to_string(const Bipartition& b) { return b.first.to_string() + "|" + b.second.to_string(); }

Bipartition cycle_signature(const SignedPerm& g) {
    const int d = g.degree();
    std::vector<char> seen(d, 0);
    std::vector<int> pos, neg;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1;
        for (int j = i; !seen[j]; j = std::abs(g.img[j]) - 1) {
            seen[j] = 1;
            ++len;
            if (g.img[j] < 0) sign = -sign;
        }
        (sign > 0 ? pos : neg).push_back(len);
    }
    return {Partition::from_unsorted(pos), Partition::from_unsorted(neg)};
}

long ClassFunction::at(const Bipartition& c) const {
    auto it = values.find(c);
    return it == values.end() ? 0 : it->second;
}

long ClassFunction::dimension() const { return at({Partition(std::vector<int>(d, 1)), Partition()}); }

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (d != o.d) throw InputError("class functions on different groups");
    for (const auto& [c, v] : o.values) values[c] += v;
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (d != o.d) throw InputError("class functions on different groups");
    for (const auto& [c, v] : o.values) values[c] -= v;
    return *this;
}

ClassFunction ClassFunction::scaled(long c) const {
    ClassFunction out = *this;
    for (auto& [k, v] : out.values) v *= c;
    return out;
}

WeylGroup::WeylGroup(int d) : d_(d) {
    check_rank(d);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            SignedPerm g;
            g.img.resize(d);
            for (int i = 0; i < d; ++i) g.img[i] = ((mask >> i) & 1u) ? -(perm[i] + 1) : perm[i] + 1;
            index_.emplace(perm_key(g), static_cast<std::uint32_t>(elements_.size()));
            elements_.push_back(std::move(g));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<Bipartition, std::pair<long, std::uint32_t>> tally;
    for (std::uint32_t k = 0; k < elements_.size(); ++k) {
        auto [it, fresh] = tally.try_emplace(cycle_signature(elements_[k]), 0, k);
        ++it->second.first;
    }
    for (const auto& [label, info] : tally) {
        classes_.push_back(label);
        sizes_.push_back(info.first);
        reps_.push_back(elements_[info.second]);
    }

    std::vector<SignedPerm> inverses;
    inverses.reserve(elements_.size());
    for (const auto& x : elements_) inverses.push_back(x.inverse());
    conjugates_.resize(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) {
        auto& list = conjugates_[c];
        list.reserve(elements_.size());
        for (std::size_t k = 0; k < elements_.size(); ++k) list.push_back(index_of(inverses[k] * reps_[c] * elements_[k]));
    }
}

std::shared_ptr<const WeylGroup> WeylGroup::get(int d) {
    check_rank(d);
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const WeylGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, std::make_shared<const WeylGroup>(d)).first;
    return it->second;
}

int WeylGroup::class_index(const Bipartition& c) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), c);
    if (it == classes_.end() || *it != c) throw InputError("unknown conjugacy class " + to_string(c));
    return static_cast<int>(it - classes_.begin());
}

std::uint32_t WeylGroup::index_of(const SignedPerm& g) const {
    if (g.degree() != d_) throw InputError("signed permutation of wrong degree");
    return index_.at(perm_key(g));
}

std::vector<SignedPerm> enumerate_group(int d) { return WeylGroup::get(d)->elements(); }

std::map<Bipartition, long> class_sizes(int d) {
    auto g = WeylGroup::get(d);
    std::map<Bipartition, long> out;
    for (std::size_t c = 0; c < g->classes().size(); ++c) out[g->classes()[c]] = g->class_sizes()[c];
    return out;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.d != b.d) throw InputError("class functions on different groups");
    auto g = WeylGroup::get(a.d);
    BigInt total = 0;
    for (std::size_t c = 0; c < g->classes().size(); ++c)
        total += BigInt(g->class_sizes()[c]) * a.at(g->classes()[c]) * b.at(g->classes()[c]);
    return Rational(total, BigInt(static_cast<unsigned long>(g->order())));
}

ClassFunction trivial_character(int d) {
    auto g = WeylGroup::get(d);
    ClassFunction out;
    out.d = d;
    for (const auto& c : g->classes()) out.values[c] = 1;
    return out;
}

ClassFunction chi_closed_form(int d) {
    auto g = WeylGroup::get(d);
    ClassFunction out;
    out.d = d;
    for (const auto& c : g->classes()) out.values[c] = c.second.num_parts() % 2 ? -1 : 1;
    return out;
}

ClassFunction induced_character(int d, const SubgroupSpec& subgroup) {
    int total = 0;
    long h_order = 1;
    for (const auto& b : subgroup) {
        if (b.size < 0) throw BadBlockSizes("negative block size");
        total += b.size;
        h_order *= factorial(b.size) * (b.group == BlockGroup::Hyp ? (1L << b.size) : 1L);
    }
    if (total != d) throw BadBlockSizes("block sizes sum to " + std::to_string(total) + ", expected " + std::to_string(d));
    auto g = WeylGroup::get(d);
    std::vector<long> weights(g->order(), 0);
    for (std::size_t k = 0; k < g->order(); ++k) {
        const auto& y = g->elements()[k];
        long w = 1;
        int start = 0;
        for (const auto& b : subgroup) {
            if (!block_member(y, start, b.size, b.group == BlockGroup::Hyp)) {
                w = 0;
                break;
            }
            if (b.chr == BlockChar::Chi) w *= block_chi(y, start, b.size);
            else if (b.chr == BlockChar::SignBar) w *= block_sign_bar(y, start, b.size);
            start += b.size;
        }
        weights[k] = w;
    }
    return induce_weights(*g, weights, h_order);
}

ClassFunction induce_product(int d, const std::vector<ClassFunction>& factors) {
    int total = 0;
    long h_order = 1;
    for (const auto& f : factors) {
        if (f.d < 0) throw BadBlockSizes("negative block size");
        total += f.d;
        h_order *= static_cast<long>(group_order(f.d));
    }
    if (total != d) throw BadBlockSizes("block sizes sum to " + std::to_string(total) + ", expected " + std::to_string(d));
    auto g = WeylGroup::get(d);
    std::vector<long> weights(g->order(), 0);
    for (std::size_t k = 0; k < g->order(); ++k) {
        const auto& y = g->elements()[k];
        long w = 1;
        int start = 0;
        for (const auto& f : factors) {
            if (!block_member(y, start, f.d, true)) {
                w = 0;
                break;
            }
            w *= f.at(cycle_signature(restrict_block(y, start, f.d)));
            start += f.d;
        }
        weights[k] = w;
    }
    return induce_weights(*g, weights, h_order);
}

ClassFunction rho(int d, int i) {
    if (i < 0 || i > d) throw IndexOutOfRange("rho index " + std::to_string(i) + " outside 0.." + std::to_string(d));
    return induced_character(d, {{i, BlockGroup::Hyp, BlockChar::Chi}, {d - i, BlockGroup::Hyp, BlockChar::Trivial}});
}

GradedVirtualCharacter k_int_character(int d) {
    check_rank(d);
    GradedVirtualCharacter out;
    for (int i = 0; i <= d; ++i) out.push_back(rho(d, i));
    return out;
}

GradedVirtualCharacter k_eis_character(int d) {
    check_rank(d);
    GradedVirtualCharacter out;
    for (int i = 0; i <= d; ++i) {
        ClassFunction grade;
        grade.d = d;
        for (int j = 0; j <= i; ++j) {
            auto term = induced_character(d, {{i - j, BlockGroup::Sym, BlockChar::Trivial},
                                              {j, BlockGroup::Hyp, BlockChar::SignBar},
                                              {d - i, BlockGroup::Hyp, BlockChar::Trivial}});
            if (j % 2) grade -= term;
            else grade += term;
        }
        out.push_back(std::move(grade));
    }
    return out;
}

namespace {

// First class where a and b differ, or empty.
std::string first_difference(const ClassFunction& a, const ClassFunction& b, std::string& detail) {
    auto g = WeylGroup::get(a.d);
    for (const auto& c : g->classes())
        if (a.at(c) != b.at(c)) {
            detail = std::to_string(a.at(c)) + " != " + std::to_string(b.at(c));
            return to_string(c);
        }
    return {};
}

}  // namespace

WeylReport verify_rho_decomposition(int d) {
    WeylReport rep;
    rep.check = "rho_decomposition";
    rep.d = d;
    const auto lhs = induced_character(d, {{d, BlockGroup::Sym, BlockChar::Trivial}});
    std::vector<ClassFunction> rhos;
    ClassFunction sum;
    sum.d = d;
    for (int i = 0; i <= d; ++i) {
        rhos.push_back(rho(d, i));
        sum += rhos.back();
    }
    rep.class_label = first_difference(lhs, sum, rep.detail);
    if (!rep.class_label.empty()) return rep;
    for (int i = 0; i <= d; ++i)
        for (int j = i; j <= d; ++j) {
            const auto ip = inner_product(rhos[i], rhos[j]);
            if (ip != Rational(i == j ? 1 : 0)) {
                rep.grade = i;
                rep.detail = "<rho_" + std::to_string(i) + ", rho_" + std::to_string(j) + "> = " + ip.to_string();
                return rep;
            }
        }
    rep.pass = true;
    return rep;
}

WeylReport verify_chi_lemma(int d) {
    WeylReport rep;
    rep.check = "chi_lemma";
    rep.d = d;
    ClassFunction alt;
    alt.d = d;
    for (int j = 0; j <= d; ++j) {
        auto term = induced_character(d, {{d - j, BlockGroup::Sym, BlockChar::Trivial}, {j, BlockGroup::Hyp, BlockChar::SignBar}});
        if (j % 2) alt -= term;
        else alt += term;
    }
    rep.class_label = first_difference(chi_closed_form(d), alt, rep.detail);
    rep.pass = rep.class_label.empty();
    return rep;
}

WeylReport verify_main_identity(int d) {
    WeylReport rep;
    rep.check = "main_identity";
    rep.d = d;
    const auto lhs = k_int_character(d);
    const auto rhs = k_eis_character(d);
    for (int i = 0; i <= d; ++i) {
        rep.class_label = first_difference(lhs[i], rhs[i], rep.detail);
        if (!rep.class_label.empty()) {
            rep.grade = i;
            return rep;
        }
    }
    rep.pass = true;
    std::lock_guard<std::mutex> lock(registry_mutex);
    verified_ranks.insert(d);
    return rep;
}

bool main_identity_verified(int d) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    return verified_ranks.count(d) > 0;
}

void reset_main_identity_registry() {
    std::lock_guard<std::mutex> lock(registry_mutex);
    verified_ranks.clear();
}

bool ensure_main_identity(int d) {
    if (main_identity_verified(d)) return true;
    return verify_main_identity(d).pass;
}

}  // namespace swkit
