#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace nmtforge {

// All randomness in a run flows from one master seed. Stage seeds are derived
// by mixing the master seed with a stage label (and optional counter) through
// splitmix64, so adding a stage never shifts the streams of the others.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stage,
                                 std::uint64_t counter = 0) {
    return splitmix64(splitmix64(master ^ fnv1a(stage)) ^ counter);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::string_view stage,
                                std::uint64_t counter = 0) {
    return std::mt19937_64(derive_seed(master, stage, counter));
}

}  // namespace nmtforge
