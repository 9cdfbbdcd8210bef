#pragma once

#include <cmath>
#include <cstdint>

namespace editctrl {

// Counter-based generator: the stream is a pure function of (seed, counter),
// so identical seeds give identical streams on every platform.
class RngState {
public:
    explicit RngState(uint64_t seed = 0) : seed_(seed), counter_(0) {}

    uint64_t seed() const { return seed_; }
    uint64_t counter() const { return counter_; }

    uint64_t next_u64() {
        uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return (double)(next_u64() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n)
    uint64_t below(uint64_t n) { return n ? next_u64() % n : 0; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + (int)below((uint64_t)(hi - lo + 1));
    }

    bool chance(double p) { return uniform() < p; }

    // Box-Muller; every call consumes exactly two uniforms.
    double normal() {
        double u1 = (double)((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Derive an independent stream; deterministic in (seed, stream id).
    RngState fork(uint64_t stream) const {
        uint64_t z = seed_ ^ (0xD6E8FEB86659FD93ull + stream * 0xCA01F9DD45E68EC5ull);
        z = (z ^ (z >> 32)) * 0xD6E8FEB86659FD93ull;
        z = (z ^ (z >> 32)) * 0xD6E8FEB86659FD93ull;
        return RngState(z ^ (z >> 32));
    }

private:
    uint64_t seed_;
    uint64_t counter_;
};

}  // namespace editctrl
