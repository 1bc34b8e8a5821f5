#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "diamforge/factor.hpp"
#include "diamforge/rng.hpp"

namespace diamforge {

class ProductGroup;

// One slot of a product element: the factor it lives in plus the element's
// canonical index there.
struct FactorElement {
    const RealizedFactor* factor = nullptr;
    std::uint32_t index = 0;

    bool is_identity() const { return index == 0; }
    const Permutation& permutation() const { return factor->permutation(index); }
    std::uint64_t residue() const { return factor->residue(index); }
    std::string text() const { return factor->element_text(index); }
};

// Element of a product of realized simple factors. Components are stored as
// canonical per-factor indices; the packed index tuple is the hash encoding
// used by every search structure.
class ProductElement {
public:
    ProductElement() = default;
    ProductElement(const ProductGroup* group, std::vector<std::uint32_t> components);

    const ProductGroup& group() const { return *group_; }
    int arity() const { return static_cast<int>(comp_.size()); }
    std::uint32_t component_index(int i) const { return comp_[i]; }
    const std::vector<std::uint32_t>& component_indices() const { return comp_; }

    bool is_identity() const;

    ProductElement operator*(const ProductElement& rhs) const;
    ProductElement inverse() const;

    bool operator==(const ProductElement& rhs) const { return comp_ == rhs.comp_; }
    bool operator!=(const ProductElement& rhs) const { return comp_ != rhs.comp_; }

    std::string text() const;  // "((1 2 3), 2)" style, one entry per factor

private:
    const ProductGroup* group_ = nullptr;
    std::vector<std::uint32_t> comp_;
};

ProductElement commutator(const ProductElement& a, const ProductElement& b);

class ProductGroup {
public:
    explicit ProductGroup(std::vector<FactorDescriptor> factors,
                          std::uint64_t element_cap = default_caps().element_cap);

    int arity() const { return static_cast<int>(factors_.size()); }
    const FactorDescriptor& factor(int i) const { return factors_[i]; }
    const RealizedFactor& realized(int i) const { return *realized_[i]; }
    std::shared_ptr<const RealizedFactor> realized_ptr(int i) const { return realized_[i]; }

    const std::vector<int>& abelian_indices() const { return abelian_; }
    const std::vector<int>& nonabelian_indices() const { return nonabelian_; }
    bool all_abelian() const { return nonabelian_.empty(); }
    bool all_nonabelian() const { return abelian_.empty(); }

    const Integer& order() const { return order_; }
    bool order_fits_u64() const { return order_fits_; }
    std::uint64_t order_u64() const;  // throws if the order exceeds 2^63

    ProductElement identity() const;
    ProductElement make(std::vector<std::uint32_t> components) const;

    // 0-based factor projection
    FactorElement project(const ProductElement& g, int i) const;
    // projection onto a sub-product (indices ascending); realizations shared
    ProductGroup subproduct(const std::vector<int>& indices) const;
    ProductElement project_to(const ProductElement& g, const std::vector<int>& indices,
                              const ProductGroup& sub) const;

    // packed index tuple; identity encodes to 0
    int total_bits() const { return total_bits_; }
    std::uint64_t encode(const std::uint32_t* comp) const;
    std::uint64_t encode(const ProductElement& g) const { return encode(g.component_indices().data()); }
    void decode(std::uint64_t code, std::uint32_t* comp) const;
    ProductElement decode(std::uint64_t code) const;

    ProductElement random_element(Rng& rng) const;

    std::string describe() const;  // "Alt(5) x Alt(5)"

    bool compatible_with(const ProductGroup& other) const;

private:
    std::vector<FactorDescriptor> factors_;
    std::vector<std::shared_ptr<const RealizedFactor>> realized_;
    std::vector<int> abelian_, nonabelian_;
    std::vector<int> shift_;
    Integer order_;
    bool order_fits_ = false;
    std::uint64_t order_u64_ = 0;
    int total_bits_ = 0;
};

// true iff the closure of `elements` is the whole group; walks at most
// `state_cap` states
bool is_generating(const std::vector<ProductElement>& elements, const ProductGroup& group,
                   std::uint64_t state_cap = default_caps().state_cap);
// single-factor variant over element indices
bool is_generating(const std::vector<std::uint32_t>& element_indices, const RealizedFactor& factor);

}  // namespace diamforge
