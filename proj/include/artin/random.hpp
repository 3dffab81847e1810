#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "artin/field.hpp"

namespace artin {

/// Explicit seed state. mt19937_64 output is fixed by the standard, and residues are drawn by
/// rejection rather than through a distribution object, so streams agree across toolchains.
class SeedState {
public:
    explicit SeedState(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    Residue uniform(FieldSpec field) {
        const std::uint64_t p = field.prime();
        const std::uint64_t limit = (~std::uint64_t{0} / p) * p;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<Residue>(x % p);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = (~std::uint64_t{0} / n) * n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Per-task seed: hash(master seed, task id). FNV-1a over the id, mixed with the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return splitmix64(h ^ splitmix64(master));
}

} // namespace artin
