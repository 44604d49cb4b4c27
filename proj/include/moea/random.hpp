#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace moea {

// Generator identity, recorded in output metadata. The mt19937_64 engine is
// fully specified by the C++ standard, and every draw helper below is our own
// fixed arithmetic, so identical seeds give identical sequences on any
// conforming platform. Bump the version if any draw rule changes.
inline constexpr std::string_view rng_name = "mt19937_64/v1";

// SplitMix64 finalizer; used for seed derivation only, never for run streams.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Stable per-run seed: run_seed = mix64(mix64(base_seed ^ fnv1a64(cell_tag)) ^ run_index).
// `cell_tag` is the canonical "problem/algorithm/archive/mu_rule/n=N" string
// (see harness.hpp). Independent of worker count and cell enumeration order.
constexpr std::uint64_t derive_run_seed(std::uint64_t base_seed, std::string_view cell_tag,
                                        std::uint64_t run_index) noexcept {
    return mix64(mix64(base_seed ^ fnv1a64(cell_tag)) ^ run_index);
}

class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Unbiased integer in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t r = next();
        while (r < min) r = next();
        return r % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace moea
