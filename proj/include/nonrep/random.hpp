#pragma once

#include <cstdint>

namespace nonrep {

/// splitmix64; used instead of <random> distributions so that results are
/// byte-identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound); bound > 0
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    /// deterministic sub-stream for (seed, tag) pairs
    static Rng derive(std::uint64_t seed, std::uint64_t tag) {
        Rng mix(seed ^ (tag * 0xD1B54A32D192ED03ULL + 0x8BB84B93962EACC9ULL));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

}  // namespace nonrep
