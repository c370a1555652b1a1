#pragma once

#include <cstdint>

namespace swkit {

// Default enumeration limits. Every limit is multiplied by the guard scale,
// which is read once from SWKIT_GUARD_SCALE and may be overridden in-process.
struct GuardDefaults {
    static constexpr int kPartitionSize = 12;
    static constexpr std::uint64_t kRingElements = 10'000'000;
    static constexpr std::uint64_t kModuleSize = 1'000'000;
    static constexpr std::uint64_t kRepBruteForce = 100'000'000;
    static constexpr std::uint64_t kRepCharacterGroup = 50'000'000;
    static constexpr int kWeylRank = 6;
    static constexpr int kGrassmannRank = 10;
};

double guard_scale();
void set_guard_scale(double scale);

std::uint64_t scaled_guard(std::uint64_t base);
int scaled_guard(int base);

}  // namespace swkit
