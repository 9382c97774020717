#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace ddm {

namespace detail {

// splitmix64 finalizer. Pure 64-bit integer arithmetic, so the stream is
// bit-identical on every platform.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace detail

// Counter-based random stream: draw i is a pure function of (seed, counter+i).
// Child streams hash a label into the seed, so streams with distinct labels
// never overlap.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    RngStream child(std::string_view label) const {
        return RngStream(detail::mix64(seed_ ^ detail::fnv1a64(label)));
    }

    RngStream child(std::string_view label, std::uint64_t index) const {
        std::uint64_t h = detail::fnv1a64(label);
        return RngStream(detail::mix64(detail::mix64(seed_ ^ h) + index));
    }

    std::uint64_t next_u64() { return detail::mix64(seed_ ^ detail::mix64(++counter_)); }

    // Uniform in (0, 1]; never returns 0 so log() is always safe.
    double next_uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (cosine branch; consumes two counters).
    double next_gaussian() {
        double u1 = next_uniform();
        double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace ddm
