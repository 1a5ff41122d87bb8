#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "causaldisc/dmg.hpp"

namespace causaldisc {

/// SplitMix64. Used instead of <random> engines so that seeded output is
/// bit-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0.
    std::uint32_t next_below(std::uint32_t bound) {
        // Lemire's multiply-shift; unbiased via rejection
        while (true) {
            std::uint64_t x = next_u64() & 0xffffffffull;
            std::uint64_t m = x * bound;
            std::uint32_t low = static_cast<std::uint32_t>(m);
            if (low >= bound || low >= (-bound) % bound) return static_cast<std::uint32_t>(m >> 32);
        }
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = next_below(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
        return z;
    }

private:
    std::uint64_t state_;
};

struct JciConstraint {
    int context_count = 0;
    unsigned subset = 0;  // bit k set = JCI assumption k+1 holds, k in 0..2
};

struct RandomDmgOptions {
    bool acyclic_only = false;
    bool causal_sufficiency = false;
    std::optional<JciConstraint> jci;
};

/// Seeded deterministic DMG generator. Densities must lie in [0, 1]. Context
/// nodes, when requested, occupy the lowest indices and are named C1..Ck.
Dmg random_dmg(int n, double edge_density, double bidirected_density, std::uint64_t seed,
               const RandomDmgOptions& options = {});

}  // namespace causaldisc
