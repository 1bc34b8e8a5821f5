#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diamforge/factor.hpp"
#include "diamforge/rational.hpp"

namespace diamforge {

// Exact evaluation of a diameter bound, kept alongside the sharper
// pre-simplification sum it came from. Everything is rational; callers
// needing an integer word budget take the floor.
struct BoundReport {
    std::string kind;  // "abelian" | "nonabelian" | "mixed"
    Rational bound_value;
    Rational sharp_sum_value;

    struct PerFactorConstant {
        std::string factor;
        std::string term;  // "C_A" | "C_L" | "C_S"
        int x = 0;
    };
    std::vector<PerFactorConstant> per_factor_constants;

    // inputs echo, filled as applicable
    int n = 0;
    int d = 0;
    int d_abelian = 0;
    int d_nonabelian = 0;
    int max_alt_degree = 0;
    int max_lie_rank = 0;
    std::vector<std::pair<std::uint64_t, int>> prime_powers;  // (p, e), ascending
};

// ceil(log2 i) for i >= 1, exact bit arithmetic
int ceil_log2(std::uint64_t i);

// the per-factor constant x_i: max{3, floor(m/2)} / 8(5r+7) / 6
int classify_constant(const FactorDescriptor& factor);

// sum_{i=1}^{n-1} 4^{ceil(log2 i)}, exact
Integer tree_cost_sum(std::uint64_t n);

// (2/3) max e_j prod p_j, with the sharp per-prime sum alongside
BoundReport abelian_bound(std::vector<std::pair<std::uint64_t, int>> prime_powers);

// (196/243) n^3 max{C_A,C_L,C_S} (4d+1) + d, with the sharp tree sum alongside
BoundReport nonabelian_bound(const std::vector<FactorDescriptor>& factors, int d);

// d_A + 4 d_NA
BoundReport mixed_bound(int d_abelian, int d_nonabelian);

}  // namespace diamforge
