#pragma once

#include <cstdint>

namespace lotto::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman & Vigna). Chosen over the stdlib engines for its
// cheap seeding: Monte Carlo runs build one engine per replicate so that
// results do not depend on the worker count, and mt19937 initialization
// would dominate the sampling cost.
class Engine {
public:
    using result_type = std::uint64_t;

    explicit Engine(std::uint64_t key = 0) {
        std::uint64_t sm = key;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// 64-bit key for the substream (seed, stream, index). Engines built from
// distinct keys behave as independent generators, so concurrent replicates
// reproduce exactly for any worker count.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index) {
    std::uint64_t s = seed;
    s = splitmix64(s) ^ (stream * 0xd1342543de82ef95ULL);
    s = splitmix64(s) ^ (index * 0xaf251af3b0f025b5ULL);
    return splitmix64(s);
}

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0,
                          std::uint64_t index = 0) {
    return Engine(stream_key(seed, stream, index));
}

// Uniform in [0, 1) with 53-bit resolution.
inline double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

}  // namespace lotto::rng
