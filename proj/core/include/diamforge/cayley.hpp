#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diamforge/caps.hpp"
#include "diamforge/flat_hash.hpp"
#include "diamforge/generating_set.hpp"
#include "diamforge/product.hpp"
#include "diamforge/word.hpp"

namespace diamforge {

struct BfsOptions {
    std::uint64_t state_cap = default_caps().state_cap;
    int threads = 1;
    bool want_words = false;
    int max_depth = -1;  // -1 = walk to stabilization
};

// Result of a layered walk from the identity. Discovery order is shortlex
// (level by level, parents in discovery order, generators in index order)
// and is independent of the thread count: each level's candidates are merged
// canonically before ids are assigned.
class WordMap {
public:
    std::uint64_t size() const { return enc_.size(); }
    int depth() const { return static_cast<int>(level_end_.size()) - 1; }
    bool stabilized() const { return stabilized_; }

    bool contains(const ProductElement& g) const { return ids_.contains(group_->encode(g)); }
    bool contains_encoding(std::uint64_t code) const { return ids_.contains(code); }

    std::uint64_t encoding_at(std::uint64_t id) const { return enc_[id]; }
    ProductElement element_at(std::uint64_t id) const { return group_->decode(enc_[id]); }

    int distance(const ProductElement& g) const;          // throws if absent
    int distance_of_id(std::uint64_t id) const;
    bool has_words() const { return !parent_.empty() || enc_.size() <= 1; }
    Word word_of(const ProductElement& g) const;          // shortest, shortlex tie-broken
    Word word_of_id(std::uint64_t id) const;

    const ProductGroup& group() const { return *group_; }

private:
    friend WordMap run_layered_bfs(const ProductGroup&, const std::vector<ProductElement>&,
                                   const BfsOptions&);
    const ProductGroup* group_ = nullptr;
    std::vector<std::uint64_t> enc_;
    FlatU64Map ids_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> via_;
    std::vector<std::uint64_t> level_end_;  // prefix count per level; [0] == 1
    bool stabilized_ = false;
};

// The walk multiplies on the right by gen_list entries in index order; word
// letters refer to positions in gen_list. Passing the projection of a
// generating set keeps letter indices aligned with the original set, which
// is what makes lifted words evaluate correctly upstairs.
WordMap run_layered_bfs(const ProductGroup& group, const std::vector<ProductElement>& gen_list,
                        const BfsOptions& opts);

struct DiameterResult {
    int diameter = 0;
    std::uint64_t reached = 0;
    std::optional<WordMap> words;
};

// Exact diameter of Cay(G, S). Throws NotGeneratingError when the walk
// stabilizes below |G| and CapExceededError past the state cap.
DiameterResult bfs_diameter(const ProductGroup& group, const GeneratingSet& gens,
                            BfsOptions opts = {});

// S^k: every product of at most k generators (e is in S, so balls are
// nested). Words are recorded.
WordMap ball(const GeneratingSet& gens, int k, BfsOptions opts = {});

// Monoid closure of arbitrary elements; in a finite group this is <elements>.
std::vector<std::uint64_t> closure_encodings(const ProductGroup& group,
                                             const std::vector<ProductElement>& elements,
                                             std::uint64_t state_cap = default_caps().state_cap);

// Dense walk of one factor under the per-factor images of the generating
// set: gen_images[k] is the image of generator k. Words use the original
// generator indices, so lifting a coset representative is evaluation in G.
struct FactorBfs {
    std::vector<std::int32_t> dist;  // -1 = unreached
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> via;
    std::vector<std::uint32_t> order;  // discovery order, identity first
    int diameter = 0;
    bool complete = false;

    Word word_of(std::uint32_t idx) const;
};

FactorBfs factor_bfs(const RealizedFactor& factor, const std::vector<std::uint32_t>& gen_images);

}  // namespace diamforge
