#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diamforge {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A set that was supposed to generate a group turned out not to.
struct NotGeneratingError : Error {
    using Error::Error;
};

// An enumeration or search exceeded the configured element/state cap.
struct CapExceededError : Error {
    CapExceededError(const std::string& what_arg, std::uint64_t cap)
        : Error(what_arg + " (cap " + std::to_string(cap) + ")"), cap(cap) {}
    std::uint64_t cap;
};

// Operation defined only for non-abelian factors got a cyclic one.
struct AbelianFactorError : Error {
    using Error::Error;
};

struct TrivialGroupError : Error {
    using Error::Error;
};

// Exhaustive commutator search failed; on a simple non-abelian factor this
// cannot happen, so reaching it means the precondition was violated.
struct OreNotFoundError : Error {
    using Error::Error;
};

// Internal certified-construction invariants (budget overruns, missing
// Schreier element, missing basis). Loud by design: any of these firing
// means a bug, not bad input.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : Error {
    ParseError(const std::string& what_arg, std::size_t position)
        : Error(what_arg + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

}  // namespace diamforge
