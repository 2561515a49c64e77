#include "locwalk/rng.hpp"

#include <cmath>

namespace locwalk {

double RngStream::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = next_double_pos();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    cached_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
}

std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t tag, std::uint64_t index) {
    return mix64(mix64(master_seed ^ tag) ^ (index + 0x9e3779b97f4a7c15ULL));
}

}  // namespace locwalk
