#pragma once

#include <cstdint>

namespace monkey {

// xoshiro256** 1.0 (Blackman/Vigna, public domain reference implementation),
// seeded through splitmix64 so that any 64-bit seed yields a well-mixed state.
// Substreams are derived from the construction key only, never from consumed
// state, so split(i) is reproducible regardless of draw order.
class Rng {
public:
    static constexpr const char* kAlgorithmId = "xoshiro256starstar-1.0";

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        key_ = mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^
                   (stream * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL));
        std::uint64_t x = key_;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            word = mix(x);
        }
    }

    // Independent generator for substream `stream` of this generator.
    Rng split(std::uint64_t stream) const {
        return Rng(key_, stream + 1);
    }

    std::uint64_t next_u64() {
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

    // Uniform in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t state_[4];
};

} // namespace monkey
