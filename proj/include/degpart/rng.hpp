// Small deterministic RNG helpers.  Draws avoid std::uniform_int_distribution
// so that sequences are identical across standard libraries.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace degpart {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// independent stream i of a base seed
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed + 0x632be59bd9b4e019ULL * (stream + 1);
    return splitmix64(s);
}

// uniform draw from [0, bound); bound >= 1
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng_below(rng, i)]);
}

}  // namespace degpart
