#pragma once

#include <vector>

#include "diamforge/product.hpp"
#include "diamforge/word.hpp"

namespace diamforge {

enum class Provenance { Original, Inverse, Identity };

// Symmetric, identity-containing, duplicate-free generator list. Indexing is
// stable: originals first in input order, then the inverses that had to be
// added, then the identity if it was missing. Word letters refer to these
// indices.
class GeneratingSet {
public:
    GeneratingSet() = default;  // empty shell; fill via normalize

    // S := S u S^-1 u {e}, deduplicated by canonical encoding
    static GeneratingSet normalize(const ProductGroup& group,
                                   const std::vector<ProductElement>& elements);

    const ProductGroup& group() const { return *group_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const ProductElement& operator[](int i) const { return entries_[i]; }
    Provenance provenance(int i) const { return provenance_[i]; }
    int identity_index() const { return identity_index_; }

    // count of non-identity entries (the walking degree of the Cayley graph)
    int moving_size() const { return size() - 1; }

    ProductElement evaluate(const Word& w) const;

    // permute/conjugate variants used by invariance tests
    GeneratingSet conjugated_by(const ProductElement& h) const;

private:
    const ProductGroup* group_ = nullptr;
    std::vector<ProductElement> entries_;
    std::vector<Provenance> provenance_;
    int identity_index_ = -1;
};

// Draws uniform elements until they generate, growing the draw count when a
// size keeps failing. Deterministic for a fixed rng state.
GeneratingSet random_generating_set(const ProductGroup& group, Rng& rng,
                                    std::uint64_t state_cap = default_caps().state_cap);

}  // namespace diamforge
