#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "diamforge/factor.hpp"

namespace diamforge {

struct ConjugacyClass {
    std::uint32_t representative;        // smallest member index
    std::vector<std::uint32_t> members;  // ascending
    bool is_trivial = false;
};

struct ClassTable {
    std::vector<ConjugacyClass> classes;   // ordered by representative
    std::vector<std::uint32_t> class_of;   // element index -> class position
};

// Complete partition of the factor into conjugacy classes.
ClassTable conjugacy_classes(const RealizedFactor& factor);

// cd(T): smallest m with (C u C^-1 u {e})^m = T for every nontrivial class C.
// The powered sets are nested, so this is a per-class stabilization depth.
int conjugacy_diameter(const RealizedFactor& factor);

// cn(T): smallest m with C^m = T for every nontrivial class C (plain class
// powers, not nested). cd <= cn always.
int covering_number(const RealizedFactor& factor);

// Writes g as a commutator [g1, g2]. Randomized search with a seeded stream,
// then a deterministic exhaustive sweep; failure of the sweep on a simple
// non-abelian factor would falsify the decomposition claim and throws loudly.
std::pair<std::uint32_t, std::uint32_t> ore_decompose(const RealizedFactor& factor,
                                                      std::uint32_t g,
                                                      std::uint64_t seed = 0);

// Family upper bound for cd: max{3, floor(m/2)} alternating, 8(5r+7) Lie
// type, 6 sporadic/Tits. Rejects cyclic descriptors.
int cd_upper_bound(const FactorDescriptor& factor);

}  // namespace diamforge
