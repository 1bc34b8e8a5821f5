#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "diamforge/bounds.hpp"
#include "diamforge/cayley.hpp"
#include "diamforge/generating_set.hpp"
#include "diamforge/product.hpp"
#include "diamforge/word.hpp"

namespace diamforge {

struct ExecConfig {
    Caps caps = default_caps();
    int threads = 1;
    std::uint64_t seed = 0;
};

// Output of one Schreier rewriting pass: coset representatives for G/N with
// words of length <= d, and generators of N = ker(rho_j) with words of
// length <= 2d+1, where d is the diameter of the projected walk on T_j.
struct SchreierCertificate {
    int killed_factor = 0;
    int quotient_diameter = 0;
    std::vector<ProductElement> coset_rep;   // by T_j element index
    std::vector<Word> coset_rep_word;
    std::vector<ProductElement> kernel_gens;
    std::vector<Word> kernel_gen_words;
};

SchreierCertificate schreier_generators(const ProductGroup& group, const GeneratingSet& gens,
                                        int kill, const ExecConfig& cfg = {});

// Deduplicated element -> word list in deterministic construction order.
struct WordedElements {
    std::vector<ProductElement> elements;
    std::vector<Word> words;
};

// S' = {e} u {y x y^-1 | y in S^d} u {y x^-1 y^-1 | y in S^d}; every word
// has length <= 4d+1 given |x| <= 2d+1. Projected to any factor where x is
// trivial, S' stays trivial; projected to the target it is the symmetrized
// conjugacy class of x's component.
WordedElements conjugate_spread(const ProductGroup& group, const GeneratingSet& gens,
                                const ProductElement& x, const Word& x_word, int d,
                                const ExecConfig& cfg = {});

// Covering table for one target factor: for every value t of T_i an element
// with that i-th component, identity on every killed factor, and a word
// within word_budget.
struct CoveringSet {
    int target = 0;
    std::vector<int> killed;  // ascending
    std::vector<ProductElement> element_by_value;
    std::vector<Word> word_by_value;
    Integer word_budget;
};

// X_{i,j}: surjective on factor i, trivial on factor j, budget x_i(4d+1).
// Without j the degenerate ball covering (budget d) is returned.
CoveringSet cover_component_kill_one(const ProductGroup& group, const GeneratingSet& gens, int i,
                                     std::optional<int> j, int d, const ExecConfig& cfg = {});

// Combines single-kill covering sets over I = {killed indices} into one set
// killing all of I, via commutators up a balanced partition tree of
// ceil(log2 |I|) layers; budget multiplies by 4 per layer.
CoveringSet commutator_tree_combine(const std::vector<CoveringSet>& sets, int target,
                                    const ExecConfig& cfg = {});

// Word decomposition over a product of non-abelian factors with certified
// length <= d + sum_{i>=2} 4^{ceil(log2(i-1))} x_i (4d+1). Construction does
// all the heavy lifting once; decompose() is a table peel per element.
class NonabelianDecomposer {
public:
    NonabelianDecomposer(const ProductGroup& group, const GeneratingSet& gens,
                         ExecConfig cfg = {});

    Word decompose(const ProductElement& g) const;

    int factor_diameter() const { return d_; }
    const Integer& sharp_budget() const { return sharp_budget_; }
    const BoundReport& bound() const { return bound_; }
    const CoveringSet& covering(int i) const { return coverings_[i]; }
    const GeneratingSet& gens() const { return *gens_; }

private:
    const ProductGroup* group_;
    const GeneratingSet* gens_;
    ExecConfig cfg_;
    int d_ = 0;
    std::vector<CoveringSet> coverings_;
    Integer sharp_budget_;
    BoundReport bound_;
};

// Word decomposition over a product of cyclic factors with certified length
// <= sum_i e_i floor(p_i/2) p_1...p_{i-1}, primes ascending.
class AbelianDecomposer {
public:
    AbelianDecomposer(const ProductGroup& group, const GeneratingSet& gens, ExecConfig cfg = {});

    Word decompose(const ProductElement& g) const;

    const Integer& sharp_budget() const { return sharp_budget_; }
    const BoundReport& bound() const { return bound_; }

private:
    struct Block {
        std::uint64_t prime = 0;
        std::vector<int> slots;                    // factor indices of this prime
        std::uint64_t steps = 1;                   // p_1...p_{i-1}, letters per unit
        std::vector<int> basis_gens;               // generator indices
        std::vector<std::vector<std::uint32_t>> basis_vectors;  // powered images
    };

    const ProductGroup* group_;
    const GeneratingSet* gens_;
    std::vector<Block> blocks_;
    Integer sharp_budget_;
    BoundReport bound_;
};

// Word decomposition over a mixed product: an abelian prefix from the ball
// of radius d_A, then one commutator of two lifts from the non-abelian
// projection; certified length <= d_A + 4 d_NA.
class MixedDecomposer {
public:
    MixedDecomposer(const ProductGroup& group, const GeneratingSet& gens, ExecConfig cfg = {});

    Word decompose(const ProductElement& g) const;

    int d_abelian() const { return d_abelian_; }
    int d_nonabelian() const { return d_nonabelian_; }
    Integer budget() const { return Integer(d_abelian_) + 4 * Integer(d_nonabelian_); }
    const BoundReport& bound() const { return bound_; }

private:
    const ProductGroup* group_;
    const GeneratingSet* gens_;
    ExecConfig cfg_;
    // stable addresses: projected elements and word maps point back at these
    std::unique_ptr<ProductGroup> sub_abelian_, sub_nonabelian_;
    WordMap words_abelian_, words_nonabelian_;
    int d_abelian_ = 0, d_nonabelian_ = 0;
    BoundReport bound_;
    mutable std::map<std::pair<const RealizedFactor*, std::uint32_t>,
                     std::pair<std::uint32_t, std::uint32_t>>
        ore_cache_;
};

// single-shot conveniences matching the operation names
Word decompose(const ProductGroup& group, const GeneratingSet& gens, const ProductElement& g,
               const ExecConfig& cfg = {});
Word abelian_decompose(const ProductGroup& group, const GeneratingSet& gens,
                       const ProductElement& g, const ExecConfig& cfg = {});
Word mixed_decompose(const ProductGroup& group, const GeneratingSet& gens,
                     const ProductElement& g, const ExecConfig& cfg = {});

}  // namespace diamforge
