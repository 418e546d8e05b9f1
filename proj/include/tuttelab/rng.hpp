#pragma once

#include <cstdint>

namespace tuttelab::rng {

// SplitMix64 finalizer. Used as the mixing core of the counter-based streams
// below; every randomized routine in the project derives its draws from pure
// functions of (seed, stream, retry), which is what makes results independent
// of chunk geometry and worker count.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline uint64_t draw64(uint64_t seed, uint64_t stream, uint64_t retry) {
    uint64_t z = splitmix64(seed ^ 0xD1B54A32D192ED03ull);
    z ^= splitmix64(stream * 0xBF58476D1CE4E5B9ull + retry + 1);
    return splitmix64(z);
}

// Uniform integer in [0, bound) by rejection on the top slice of the 64-bit
// range; bound stays far below 2^32 here, so retries are ~2^-44 events.
inline uint32_t draw_below(uint64_t seed, uint64_t stream, uint32_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (uint64_t retry = 0;; ++retry) {
        uint64_t w = draw64(seed, stream, retry);
        if (w < limit) return static_cast<uint32_t>(w % bound);
    }
}

// Uniform double in [0, 1) with 53 significant bits.
inline double draw_unit(uint64_t seed, uint64_t stream) {
    return static_cast<double>(draw64(seed, stream, 0) >> 11) * 0x1.0p-53;
}

}  // namespace tuttelab::rng
