#pragma once

#include <cstdint>

// Seedable, splittable 64-bit generator (SplitMix64).  We roll our own
// bounded sampling because std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries, and experiment rows must replay
// identically on any machine.

namespace hypsurf {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0ull - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    double unit() {  // [0,1) with 53 random bits
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Independent stream for a task: seed XOR hash(task id), then re-mixed.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t task_id) {
    return mix64(seed ^ mix64(task_id));
}

}  // namespace hypsurf
