#pragma once

#include <cstdint>

#include "orthoplan/planar_graph.hpp"

namespace orthoplan {

enum class ShapeKind { L, T };

struct GenSpec {
    ShapeKind kind = ShapeKind::L;
    int n = 0;
    std::uint64_t seed = 0;
};

// SplitMix64; the generator's only randomness source.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Random stacked triangulation grown by face splitting from the seed
// triangle (1,2,3), with a planted K_L or K_T; deterministic per seed.
PlanarGraph generate_instance(const GenSpec& spec);

} // namespace orthoplan
