#include "diamforge/bounds.hpp"

#include <algorithm>
#include <bit>

#include "diamforge/errors.hpp"

namespace diamforge {

int ceil_log2(std::uint64_t i) {
    if (i == 0) throw Error("ceil_log2 needs i >= 1");
    return std::bit_width(i - 1);
}

int classify_constant(const FactorDescriptor& factor) {
    switch (factor.family()) {
        case Family::Alternating:
            return std::max(3, factor.alt_degree() / 2);
        case Family::LieType:
            return 8 * (5 * factor.lie_rank() + 7);
        case Family::Sporadic:
            return 6;
        case Family::Cyclic:
            throw AbelianFactorError("no covering constant for abelian factor " + factor.name());
    }
    throw Error("unreachable factor family");
}

Integer tree_cost_sum(std::uint64_t n) {
    if (n < 1) throw Error("tree_cost_sum needs n >= 1");
    Integer sum = 0;
    if (n >= 2) sum = 1;  // i = 1 contributes 4^0
    // i in (2^{j-1}, 2^j] all contribute 4^j
    for (int j = 1; (std::uint64_t{1} << (j - 1)) < n - 1; ++j) {
        const std::uint64_t lo = std::uint64_t{1} << (j - 1);
        const std::uint64_t hi = std::min(n - 1, std::uint64_t{1} << j);
        Integer term = Integer(1) << (2 * j);
        sum += term * (hi - lo);
    }
    return sum;
}

BoundReport abelian_bound(std::vector<std::pair<std::uint64_t, int>> prime_powers) {
    if (prime_powers.empty()) throw Error("abelian bound needs at least one prime power");
    std::sort(prime_powers.begin(), prime_powers.end());
    for (std::size_t i = 0; i < prime_powers.size(); ++i) {
        const auto [p, e] = prime_powers[i];
        if (e < 1) throw Error("exponent must be >= 1");
        bool prime = p >= 2;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) throw Error(std::to_string(p) + " is not prime");
        if (i > 0 && prime_powers[i - 1].first == p)
            throw Error("repeated prime " + std::to_string(p));
    }

    BoundReport r;
    r.kind = "abelian";
    r.n = 0;
    Integer prefix = 1;  // p_1 ... p_{i-1}
    Integer sharp = 0;
    Integer prod = 1;
    int max_e = 0;
    for (const auto& [p, e] : prime_powers) {
        sharp += Integer(e) * (p / 2) * prefix;
        prefix *= p;
        prod *= p;
        max_e = std::max(max_e, e);
        r.n += e;
    }
    r.sharp_sum_value = Rational(sharp);
    r.bound_value = Rational(2 * max_e * prod, 3);
    r.prime_powers = std::move(prime_powers);
    return r;
}

BoundReport nonabelian_bound(const std::vector<FactorDescriptor>& factors, int d) {
    if (factors.empty()) throw Error("non-abelian bound needs at least one factor");
    if (d < 1) throw Error("factor diameter d must be >= 1");

    BoundReport r;
    r.kind = "nonabelian";
    r.n = static_cast<int>(factors.size());
    r.d = d;

    int max_x = 0;
    Integer sharp = d;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        const int x = classify_constant(f);  // throws on abelian factors
        const char* term = f.family() == Family::Alternating ? "C_A"
                           : f.family() == Family::LieType   ? "C_L"
                                                             : "C_S";
        r.per_factor_constants.push_back({f.name(), term, x});
        max_x = std::max(max_x, x);
        if (f.family() == Family::Alternating)
            r.max_alt_degree = std::max(r.max_alt_degree, f.alt_degree());
        if (f.family() == Family::LieType) r.max_lie_rank = std::max(r.max_lie_rank, f.lie_rank());
        if (i >= 1)
            sharp += (Integer(1) << (2 * ceil_log2(static_cast<std::uint64_t>(i)))) * x *
                     (4 * static_cast<Integer>(d) + 1);
    }
    r.sharp_sum_value = Rational(sharp);
    r.bound_value =
        Rational(Integer(196) * Integer(r.n) * r.n * r.n * max_x * (4 * Integer(d) + 1), 243) + d;
    return r;
}

BoundReport mixed_bound(int d_abelian, int d_nonabelian) {
    if (d_abelian < 0 || d_nonabelian < 0) throw Error("diameters must be >= 0");
    BoundReport r;
    r.kind = "mixed";
    r.d_abelian = d_abelian;
    r.d_nonabelian = d_nonabelian;
    r.bound_value = Rational(Integer(d_abelian) + 4 * Integer(d_nonabelian));
    r.sharp_sum_value = r.bound_value;
    return r;
}

}  // namespace diamforge
