#pragma once

#include <cstdint>

namespace diamforge {

// Resource limits. Exceeding a cap raises CapExceededError; nothing is
// silently truncated. DIAMFORGE_CAP in the environment overrides both
// defaults at startup.
struct Caps {
    std::uint64_t element_cap = 1'000'000;    // per-factor enumeration
    std::uint64_t state_cap = 10'000'000;     // BFS visited states
};

const Caps& default_caps();

}  // namespace diamforge
