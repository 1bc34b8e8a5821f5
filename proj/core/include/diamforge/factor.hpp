#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diamforge/caps.hpp"
#include "diamforge/permutation.hpp"
#include "diamforge/rational.hpp"

namespace diamforge {

enum class Family { Alternating, LieType, Sporadic, Cyclic };

class RealizedFactor;

// Abstract identity of a simple factor plus (when available) a concrete
// permutation realization. Descriptor-only factors are fine for bound
// arithmetic; anything that enumerates, walks or decomposes needs realize().
class FactorDescriptor {
public:
    static FactorDescriptor alternating(int m);          // m >= 5
    static FactorDescriptor psl2(int q);                 // projective-line action
    static FactorDescriptor m11();
    static FactorDescriptor cyclic(std::uint64_t p);     // p prime
    static FactorDescriptor sporadic(const std::string& name);
    // descriptor-only Lie-type factor; r is declared metadata, never derived
    static FactorDescriptor lie_type(const std::string& name, int untwisted_rank);

    Family family() const { return family_; }
    const std::string& name() const { return name_; }
    int alt_degree() const { return alt_degree_; }
    int lie_rank() const { return lie_rank_; }
    std::uint64_t cyclic_prime() const { return prime_; }
    bool abelian() const { return family_ == Family::Cyclic; }

    // exact order from the family formula; nullopt for names we only ever
    // treat symbolically
    std::optional<Integer> known_order() const;

    bool has_realization() const;

    // Materialize the factor: enumerate all elements by generator closure and
    // verify the count against the family formula. Cached per descriptor name.
    std::shared_ptr<const RealizedFactor> realize(
        std::uint64_t element_cap = default_caps().element_cap) const;

    bool operator==(const FactorDescriptor& rhs) const { return name_ == rhs.name_; }

private:
    friend class RealizedFactor;
    FactorDescriptor() = default;
    Family family_ = Family::Cyclic;
    std::string name_;
    int alt_degree_ = 0;
    int lie_rank_ = 0;
    int lie_q_ = 0;
    std::uint64_t prime_ = 0;
    int perm_degree_ = 0;
    std::vector<Permutation> perm_generators_;
};

// Fully enumerated factor. Elements are addressed by a dense index; index 0
// is the identity and the ordering is the closure BFS discovery order, which
// makes every downstream computation deterministic.
class RealizedFactor {
public:
    std::uint64_t order() const { return order_; }
    bool is_cyclic() const { return modulus_ != 0; }
    std::uint64_t modulus() const { return modulus_; }
    int bits() const { return bits_; }  // encoding width of an index
    const FactorDescriptor& descriptor() const { return descriptor_; }

    std::uint32_t identity() const { return 0; }
    std::uint32_t compose(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const;
    std::uint32_t conjugate(std::uint32_t a, std::uint32_t by) const;

    // realization generators, as indices
    const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }

    // non-cyclic accessors
    const Permutation& permutation(std::uint32_t idx) const;
    std::uint32_t index_of(const Permutation& p) const;  // throws if not a member
    // cyclic accessors
    std::uint32_t index_of_residue(std::uint64_t r) const;
    std::uint64_t residue(std::uint32_t idx) const;

    std::string element_text(std::uint32_t idx) const;

private:
    friend class FactorDescriptor;
    RealizedFactor() = default;
    void build_from_generators(std::uint64_t element_cap);

    FactorDescriptor descriptor_;
    std::uint64_t order_ = 0;
    std::uint64_t modulus_ = 0;  // nonzero exactly for cyclic factors
    int bits_ = 0;

    std::vector<Permutation> elements_;          // by index (non-cyclic)
    std::vector<std::uint32_t> inv_;             // inverse table
    std::vector<std::uint32_t> mult_;            // order x order, when small enough
    std::vector<std::uint64_t> pack_sorted_;     // packed images, sorted
    std::vector<std::uint32_t> pack_index_;      // index for pack_sorted_[k]
    std::vector<std::uint32_t> gen_idx_;
};

// Closure of the realization generators; errors out above the cap.
// For cyclic factors the "enumeration" is just {0..p-1}.
std::shared_ptr<const RealizedFactor> enumerate_elements(
    const FactorDescriptor& factor,
    std::uint64_t element_cap = default_caps().element_cap);

}  // namespace diamforge
