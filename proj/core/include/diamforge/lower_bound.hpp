#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "diamforge/generating_set.hpp"
#include "diamforge/product.hpp"
#include "diamforge/rational.hpp"
#include "diamforge/rng.hpp"

namespace diamforge {

// The generator family over Alt(m)^n: s_0 rotates every coordinate by the
// m-cycle, s_i replaces the i-th coordinate's action by the (m-2)-cycle.
struct ExampleInstance {
    int m = 0;
    int n = 0;
    std::shared_ptr<ProductGroup> group;          // Alt(m)^n
    std::vector<ProductElement> raw_generators;   // s_0 .. s_n
    GeneratingSet gens;                           // normalize({s_0..s_n})
};

// m >= 5 odd, n >= 2 even (the certified case)
ExampleInstance build_example_generators(int m, int n,
                                         std::uint64_t element_cap = default_caps().element_cap);

// f(g) = sum_j sum_i || c(g,i+1,j) - c(g,i,j) ||_{Z/mZ}, rows wrapping around
std::int64_t potential(const ProductElement& g, int m, int n);

struct LipschitzReport {
    int m = 0, n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t max_abs_delta_s0 = 0;    // must be exactly 0
    std::int64_t max_abs_delta_other = 0; // must be <= 10
};

// audits |f(g) - f(g s)| over random g and every s in S
LipschitzReport verify_lipschitz(const ExampleInstance& inst, std::uint64_t samples,
                                 std::uint64_t seed);

// (1/20)(m-1)^2 n and its ceiling
std::pair<Rational, Integer> lower_bound_value(int m, int n);

struct LowerBoundWitness {
    int m = 0, n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    ProductElement witness_element;
    Integer witness_f;
    bool witness_exact = false;  // true when m = 1 (mod 4): identity/eta pattern

    std::int64_t max_step_s0 = 0;
    std::int64_t lipschitz_observed = 0;  // max |delta f| over all audited pairs

    Rational bound_paper;          // witness_f / 10, the claimed step bound
    Integer bound_paper_ceiling;
    Rational bound_observed;       // witness_f / observed max step
    Integer bound_observed_ceiling;
};

// Builds the witness (exact for m = 1 mod 4, else a sampled even-permutation
// maximizer), audits the step sizes, and reports the certified lower bounds
// both with the claimed constant 10 and with the observed maximum.
LowerBoundWitness certify_lower_bound(const ExampleInstance& inst, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace diamforge
