#include "swkit/guards.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace swkit {

namespace {

double scale_from_env() {
    const char* raw = std::getenv("SWKIT_GUARD_SCALE");
    if (raw == nullptr) return 1.0;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || !std::isfinite(v) || v <= 0.0) return 1.0;
    return v;
}

std::atomic<double>& scale_slot() {
    static std::atomic<double> slot{scale_from_env()};
    return slot;
}

}  // namespace

double guard_scale() { return scale_slot().load(std::memory_order_relaxed); }

void set_guard_scale(double scale) {
    if (!std::isfinite(scale) || scale <= 0.0) scale = 1.0;
    scale_slot().store(scale, std::memory_order_relaxed);
}

std::uint64_t scaled_guard(std::uint64_t base) {
    return static_cast<std::uint64_t>(std::floor(static_cast<double>(base) * guard_scale()));
}

int scaled_guard(int base) { return static_cast<int>(std::floor(base * guard_scale())); }

}  // namespace swkit
