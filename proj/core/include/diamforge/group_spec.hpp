#pragma once

#include <string>
#include <vector>

#include "diamforge/generating_set.hpp"
#include "diamforge/product.hpp"

namespace diamforge {

// Grammar: factor ("alt:m" | "psl:2,q" | "cyclic:p[^e]" | "m11") separated
// by "x"; whitespace-insensitive; "^e" repeats a cyclic factor e times.
ProductGroup parse_group_spec(const std::string& text,
                              std::uint64_t element_cap = default_caps().element_cap);

// canonical spec text that re-parses to an identical group
std::string format_group_spec(const ProductGroup& group);

// One product element: items separated by ";" fill factors positionally.
// A permutation factor takes cycle notation ("(1 2 3)(4 5)" or "e"); a run
// of cyclic factors takes one residue tuple ("(1,0,2)") or a bare residue.
ProductElement parse_element(const std::string& text, const ProductGroup& group);

std::vector<ProductElement> parse_elements(const std::vector<std::string>& texts,
                                           const ProductGroup& group);

// inverse of parse_element, grouping consecutive cyclic factors into tuples
std::string format_element(const ProductElement& g);

}  // namespace diamforge
