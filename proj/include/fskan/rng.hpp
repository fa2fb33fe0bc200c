#pragma once

// Seedable, platform-independent random source used by every optimizer.
//
// Generator: xoshiro256++ (Blackman & Vigna), state seeded from the 64-bit
// seed via the splitmix64 sequence.  Both algorithms are pure integer
// arithmetic on uint64_t, so identical seeds give identical streams on any
// conforming platform.  Draw order is owned by the callers and documented
// at each call site; this header only fixes the primitive mappings:
//
//   uniform01()       -> (next() >> 11) * 2^-53, one draw, range [0, 1)
//   uniform(lo, hi)   -> lo + (hi - lo) * uniform01(), one draw
//   uniform_index(n)  -> next() % n, one draw (bias < 2^-57 for n <= 64)
//   gaussian()        -> Box-Muller cosine branch, exactly two draws

#include <cmath>
#include <cstdint>

namespace fskan {

constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Decorrelated seed for a substream identified by two small indices
// (e.g. matrix cell = (row, algorithm), multi-start = (start, 0)).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = seed;
    std::uint64_t x = splitmix64_next(s);
    s ^= (a + 1) * 0x9E3779B97F4A7C15ull;
    x ^= splitmix64_next(s);
    s ^= (b + 1) * 0xBF58476D1CE4E5B9ull;
    x ^= splitmix64_next(s);
    return x;
}

class Rng {
public:
    explicit constexpr Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64_next(sm);
    }

    constexpr std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    constexpr double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    constexpr std::uint64_t uniform_index(std::uint64_t n) { return next() % n; }

    double gaussian() {
        double u1 = uniform01();
        const double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;  // keep log finite without extra draws
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4]{};
};

}  // namespace fskan
