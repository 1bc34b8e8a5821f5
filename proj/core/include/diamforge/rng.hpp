#pragma once

#include <cstdint>

namespace diamforge {

// splitmix64: used both as a stream generator and to derive independent
// sub-seeds. Self-contained so results do not depend on the standard
// library's distribution implementations.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // warm up so that small seeds diverge immediately
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next() { return splitmix64(state_); }

    // uniform in [0, n) by rejection; n == 0 is a caller bug
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // independent child stream, stable under reordering of other draws
    Rng split(std::uint64_t tag) const {
        std::uint64_t s = state_ ^ (0xd1b54a32d192ed03ULL * (tag + 1));
        return Rng(s);
    }

private:
    std::uint64_t state_;
};

}  // namespace diamforge
