#include "diamforge/generating_set.hpp"

#include "diamforge/errors.hpp"
#include "diamforge/flat_hash.hpp"

namespace diamforge {

GeneratingSet GeneratingSet::normalize(const ProductGroup& group,
                                       const std::vector<ProductElement>& elements) {
    GeneratingSet s;
    s.group_ = &group;

    FlatU64Map seen;
    bool inserted = false;
    auto add = [&](const ProductElement& e, Provenance p) {
        seen.find_or_insert(group.encode(e), static_cast<std::uint32_t>(s.entries_.size()),
                            inserted);
        if (!inserted) return;
        s.entries_.push_back(e);
        s.provenance_.push_back(e.is_identity() ? Provenance::Identity : p);
    };

    for (const auto& e : elements) {
        if (!group.compatible_with(e.group())) throw Error("generator from a different group");
        add(e, Provenance::Original);
    }
    const std::size_t n_orig = s.entries_.size();
    for (std::size_t i = 0; i < n_orig; ++i) add(s.entries_[i].inverse(), Provenance::Inverse);
    add(group.identity(), Provenance::Identity);

    for (std::size_t i = 0; i < s.entries_.size(); ++i)
        if (s.provenance_[i] == Provenance::Identity) s.identity_index_ = static_cast<int>(i);
    return s;
}

ProductElement GeneratingSet::evaluate(const Word& w) const {
    ProductElement acc = group_->identity();
    for (const Letter& l : w.letters()) {
        if (l.gen >= static_cast<std::uint32_t>(size()))
            throw Error("word refers to generator index " + std::to_string(l.gen) +
                        " outside the generating set");
        acc = l.inv ? acc * entries_[l.gen].inverse() : acc * entries_[l.gen];
    }
    return acc;
}

GeneratingSet GeneratingSet::conjugated_by(const ProductElement& h) const {
    std::vector<ProductElement> conj;
    conj.reserve(entries_.size());
    const ProductElement hinv = h.inverse();
    for (const auto& e : entries_) conj.push_back(h * e * hinv);
    return normalize(*group_, conj);
}

GeneratingSet random_generating_set(const ProductGroup& group, Rng& rng,
                                    std::uint64_t state_cap) {
    for (int size = 2; size <= 8; ++size) {
        for (int attempt = 0; attempt < 40; ++attempt) {
            std::vector<ProductElement> draw;
            draw.reserve(size);
            for (int k = 0; k < size; ++k) draw.push_back(group.random_element(rng));
            if (is_generating(draw, group, state_cap))
                return GeneratingSet::normalize(group, draw);
        }
    }
    throw NotGeneratingError("no random generating set found for " + group.describe());
}

}  // namespace diamforge
