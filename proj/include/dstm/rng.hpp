#pragma once

#include <cstdint>
#include <random>

namespace dstm {

// Deterministic RNG wrapper. mt19937_64 has a standard-mandated output
// sequence, so identical seeds give identical streams on every platform.
// Bounded draws use plain modulo; the slight bias is irrelevant here and
// keeping the reduction fixed keeps reports byte-identical.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    uint64_t below(uint64_t n) { return n ? gen_() % n : 0; }

    // Uniform in [lo, hi], inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

// Stable per-trial seed derivation (splitmix64 step over seed XOR index).
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dstm
