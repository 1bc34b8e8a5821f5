#include "diamforge/conjugacy.hpp"

#include <algorithm>

#include "diamforge/bounds.hpp"
#include "diamforge/errors.hpp"
#include "diamforge/rng.hpp"

namespace diamforge {

ClassTable conjugacy_classes(const RealizedFactor& factor) {
    const std::uint32_t order = static_cast<std::uint32_t>(factor.order());
    ClassTable table;
    table.class_of.assign(order, 0);
    std::vector<bool> seen(order, false);

    const auto& gens = factor.generator_indices();
    for (std::uint32_t rep = 0; rep < order; ++rep) {
        if (seen[rep]) continue;
        ConjugacyClass cls;
        cls.representative = rep;
        cls.is_trivial = (rep == 0);
        std::vector<std::uint32_t> orbit{rep};
        seen[rep] = true;
        for (std::size_t at = 0; at < orbit.size(); ++at) {
            for (std::uint32_t g : gens) {
                const std::uint32_t to = factor.conjugate(orbit[at], g);
                if (!seen[to]) {
                    seen[to] = true;
                    orbit.push_back(to);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        const auto cls_id = static_cast<std::uint32_t>(table.classes.size());
        for (std::uint32_t x : orbit) table.class_of[x] = cls_id;
        cls.members = std::move(orbit);
        table.classes.push_back(std::move(cls));
    }
    return table;
}

namespace {

void require_nonabelian_factor(const RealizedFactor& factor) {
    if (factor.order() == 1) throw TrivialGroupError("trivial group has no nontrivial classes");
    if (factor.is_cyclic())
        throw AbelianFactorError("conjugacy diameter is defined for non-abelian simple factors");
}

// smallest m with (C u C^-1 u {e})^m = T; the sets are nested so each step
// only expands the previous frontier
int class_stabilization_depth(const RealizedFactor& factor, const ConjugacyClass& cls) {
    const std::uint32_t order = static_cast<std::uint32_t>(factor.order());
    std::vector<std::uint32_t> symm = cls.members;
    for (std::uint32_t x : cls.members) symm.push_back(factor.inverse(x));
    symm.push_back(0);
    std::sort(symm.begin(), symm.end());
    symm.erase(std::unique(symm.begin(), symm.end()), symm.end());

    std::vector<bool> in(order, false);
    std::vector<std::uint32_t> frontier;
    std::uint32_t count = 0;
    for (std::uint32_t x : symm) {
        in[x] = true;
        frontier.push_back(x);
        ++count;
    }
    int depth = 1;
    while (count < order) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t x : frontier) {
            for (std::uint32_t d : symm) {
                const std::uint32_t y = factor.compose(x, d);
                if (!in[y]) {
                    in[y] = true;
                    next.push_back(y);
                    ++count;
                }
            }
            if (count == order) break;
        }
        if (next.empty() && count < order)
            throw Error("class of " + factor.element_text(cls.representative) +
                        " does not generate; factor is not simple");
        ++depth;
        frontier = std::move(next);
    }
    return depth;
}

// smallest m with C^m = T; plain powers are not nested, so each power is the
// full product of the previous one with C
int class_covering_depth(const RealizedFactor& factor, const ConjugacyClass& cls, int hard_cap) {
    const std::uint32_t order = static_cast<std::uint32_t>(factor.order());
    std::vector<std::uint32_t> power = cls.members;
    for (int m = 1; m <= hard_cap; ++m) {
        if (power.size() == order) return m;
        std::vector<bool> mark(order, false);
        std::vector<std::uint32_t> next;
        next.reserve(order);
        std::uint32_t count = 0;
        for (std::uint32_t x : power) {
            for (std::uint32_t c : cls.members) {
                const std::uint32_t y = factor.compose(x, c);
                if (!mark[y]) {
                    mark[y] = true;
                    next.push_back(y);
                    ++count;
                }
            }
            if (count == order) break;  // the product set only grows within a step
        }
        std::sort(next.begin(), next.end());
        power = std::move(next);
    }
    throw InternalInvariantError("class powers did not cover the factor within the step cap");
}

}  // namespace

int conjugacy_diameter(const RealizedFactor& factor) {
    require_nonabelian_factor(factor);
    const ClassTable table = conjugacy_classes(factor);
    int cd = 0;
    for (const auto& cls : table.classes) {
        if (cls.is_trivial) continue;
        cd = std::max(cd, class_stabilization_depth(factor, cls));
    }
    return cd;
}

int covering_number(const RealizedFactor& factor) {
    require_nonabelian_factor(factor);
    const ClassTable table = conjugacy_classes(factor);
    const int hard_cap = 8 * cd_upper_bound(factor.descriptor()) + 32;
    int cn = 0;
    for (const auto& cls : table.classes) {
        if (cls.is_trivial) continue;
        cn = std::max(cn, class_covering_depth(factor, cls, hard_cap));
    }
    return cn;
}

std::pair<std::uint32_t, std::uint32_t> ore_decompose(const RealizedFactor& factor,
                                                      std::uint32_t g, std::uint64_t seed) {
    if (g == 0) return {0, 0};

    const std::uint32_t order = static_cast<std::uint32_t>(factor.order());
    auto comm = [&](std::uint32_t a, std::uint32_t b) {
        return factor.compose(factor.compose(factor.compose(a, b), factor.inverse(a)),
                              factor.inverse(b));
    };

    Rng rng(seed ^ 0x6f72655fULL);
    for (int tries = 0; tries < 10'000; ++tries) {
        const auto a = static_cast<std::uint32_t>(rng.below(order));
        const auto b = static_cast<std::uint32_t>(rng.below(order));
        if (comm(a, b) == g) return {a, b};
    }
    for (std::uint32_t a = 0; a < order; ++a)
        for (std::uint32_t b = 0; b < order; ++b)
            if (comm(a, b) == g) return {a, b};

    throw OreNotFoundError("no commutator expression for " + factor.element_text(g) + " in " +
                           factor.descriptor().name() +
                           "; the factor cannot be simple non-abelian");
}

int cd_upper_bound(const FactorDescriptor& factor) {
    return classify_constant(factor);
}

}  // namespace diamforge
