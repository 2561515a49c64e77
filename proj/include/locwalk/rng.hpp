#pragma once

#include <cstdint>
#include <utility>

namespace locwalk {

/// 64-bit finalizer used to key all streams.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

/// Counter-mode keyed stream (splitmix64). One stream per (seed, tag, index)
/// triple, so coins on an unbounded lattice and realizations in a sweep can
/// be generated lazily and in any order with identical results.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double next_double_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (second value cached).
    double next_gaussian();

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

namespace stream_tag {
inline constexpr std::uint64_t site = 0x5157414c4b534954ULL;
inline constexpr std::uint64_t realization = 0x5157414c4b52454cULL;
inline constexpr std::uint64_t scratch = 0x5157414c4b534352ULL;
}  // namespace stream_tag

/// Derives the key for stream (seed, tag, index).
std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t tag, std::uint64_t index);

inline RngStream site_stream(std::uint64_t master_seed, long long site) {
    return RngStream(stream_key(master_seed, stream_tag::site, static_cast<std::uint64_t>(site)));
}

inline RngStream realization_stream(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(stream_key(master_seed, stream_tag::realization, index));
}

/// Sub-seed for realization `index` of a sweep keyed by `master_seed`.
inline std::uint64_t realization_seed(std::uint64_t master_seed, std::uint64_t index) {
    return stream_key(master_seed, stream_tag::realization, index);
}

}  // namespace locwalk
