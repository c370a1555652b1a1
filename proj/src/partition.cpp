#include "swkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "swkit/errors.hpp"

namespace swkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase_if(parts, [](int x) { return x == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_size) {
    if (max_size < 0) throw InputError("negative partition size");
    if (max_size > scaled_guard(GuardDefaults::kPartitionSize)) throw GuardExceeded("partition size " + std::to_string(max_size));
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

BigInt gauss_binomial(int t, int j, const BigInt& q) {
    if (t < 0 || j < 0 || j > t) throw IndexOutOfRange("gauss_binomial needs 0 <= j <= t");
    if (q < 2) throw InputError("gauss_binomial needs q >= 2");
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < j; ++i) {
        num *= pow_big(q, static_cast<unsigned long>(t - i)) - 1;
        den *= pow_big(q, static_cast<unsigned long>(j - i)) - 1;
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

}  // namespace swkit
