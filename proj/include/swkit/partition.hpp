#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "swkit/guards.hpp"
#include "swkit/rational.hpp"

namespace swkit {

/// Weakly decreasing list of positive integers (a Jordan type).
class Partition {
  public:
    Partition() = default;
    /// Throws InputError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts descending and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Every partition of every size 0..max_size, grouped by size, each size in
/// reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int max_size);

/// Partitions of exactly n.
std::vector<Partition> partitions_of(int n);

/// Number of F_q-points of the Grassmannian Gr(j, t).
BigInt gauss_binomial(int t, int j, const BigInt& q);

}  // namespace swkit
