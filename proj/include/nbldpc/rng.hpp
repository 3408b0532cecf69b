#pragma once

#include <cstdint>
#include <random>

namespace nbldpc {

/// splitmix64 step; advances the state and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stateless mix of three 64-bit words into one well-scrambled word.
inline std::uint64_t mix3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t s = a;
    std::uint64_t z = splitmix64(s) ^ (b + 0x9e3779b97f4a7c15ULL);
    s ^= splitmix64(z);
    z = splitmix64(s) ^ (c + 0xc2b2ae3d27d4eb4fULL);
    s ^= splitmix64(z);
    return splitmix64(s);
}

/// Independent engine for a (master seed, stream, substream) triple.
/// Used to give every simulated frame its own reproducible noise stream,
/// independent of worker scheduling.
inline std::mt19937_64 stream_rng(std::uint64_t master, std::uint64_t stream,
                                  std::uint64_t substream) {
    return std::mt19937_64(mix3(master, stream, substream));
}

/// Unbiased uniform draw from [0, n), n >= 1. Rejection on the low
/// 2^64 mod n outputs keeps the result exactly uniform and portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

}  // namespace nbldpc
