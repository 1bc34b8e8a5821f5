#include "diamforge/product.hpp"

#include <algorithm>

#include "diamforge/errors.hpp"
#include "diamforge/flat_hash.hpp"

namespace diamforge {

ProductElement::ProductElement(const ProductGroup* group, std::vector<std::uint32_t> components)
    : group_(group), comp_(std::move(components)) {
    if (static_cast<int>(comp_.size()) != group->arity())
        throw Error("arity mismatch: element has " + std::to_string(comp_.size()) +
                    " components, group has " + std::to_string(group->arity()) + " factors");
    for (int i = 0; i < group->arity(); ++i)
        if (comp_[i] >= group->realized(i).order())
            throw Error("component index out of range in factor " + std::to_string(i + 1));
}

bool ProductElement::is_identity() const {
    return std::all_of(comp_.begin(), comp_.end(), [](std::uint32_t c) { return c == 0; });
}

ProductElement ProductElement::operator*(const ProductElement& rhs) const {
    if (!group_->compatible_with(rhs.group()))
        throw Error("arity mismatch: elements belong to different groups");
    std::vector<std::uint32_t> out(comp_.size());
    for (std::size_t i = 0; i < comp_.size(); ++i)
        out[i] = group_->realized(static_cast<int>(i)).compose(comp_[i], rhs.comp_[i]);
    return ProductElement(group_, std::move(out));
}

ProductElement ProductElement::inverse() const {
    std::vector<std::uint32_t> out(comp_.size());
    for (std::size_t i = 0; i < comp_.size(); ++i)
        out[i] = group_->realized(static_cast<int>(i)).inverse(comp_[i]);
    return ProductElement(group_, std::move(out));
}

std::string ProductElement::text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < comp_.size(); ++i) {
        if (i) out += ", ";
        out += group_->realized(static_cast<int>(i)).element_text(comp_[i]);
    }
    return out + ")";
}

ProductElement commutator(const ProductElement& a, const ProductElement& b) {
    return a * b * a.inverse() * b.inverse();
}

ProductGroup::ProductGroup(std::vector<FactorDescriptor> factors, std::uint64_t element_cap)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error("a product group needs at least one factor");
    order_ = 1;
    shift_.resize(factors_.size());
    int shift = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        realized_.push_back(factors_[i].realize(element_cap));
        (factors_[i].abelian() ? abelian_ : nonabelian_).push_back(static_cast<int>(i));
        shift_[i] = shift;
        shift += realized_[i]->bits();
        order_ *= realized_[i]->order();
    }
    total_bits_ = shift;
    if (total_bits_ > 63)
        throw CapExceededError("product needs " + std::to_string(total_bits_) +
                                   " encoding bits, supported maximum is 63",
                               63);
    order_fits_ = order_ <= Integer(~std::uint64_t{0} >> 1);
    if (order_fits_) order_u64_ = static_cast<std::uint64_t>(order_);
}

std::uint64_t ProductGroup::order_u64() const {
    if (!order_fits_) throw CapExceededError("group order exceeds 2^63", ~std::uint64_t{0} >> 1);
    return order_u64_;
}

ProductElement ProductGroup::identity() const {
    return ProductElement(this, std::vector<std::uint32_t>(factors_.size(), 0));
}

ProductElement ProductGroup::make(std::vector<std::uint32_t> components) const {
    return ProductElement(this, std::move(components));
}

FactorElement ProductGroup::project(const ProductElement& g, int i) const {
    if (i < 0 || i >= arity()) throw Error("factor index out of range: " + std::to_string(i + 1));
    return FactorElement{realized_[i].get(), g.component_index(i)};
}

ProductGroup ProductGroup::subproduct(const std::vector<int>& indices) const {
    std::vector<FactorDescriptor> sub;
    for (int i : indices) {
        if (i < 0 || i >= arity()) throw Error("factor index out of range");
        sub.push_back(factors_[i]);
    }
    return ProductGroup(std::move(sub));
}

ProductElement ProductGroup::project_to(const ProductElement& g, const std::vector<int>& indices,
                                        const ProductGroup& sub) const {
    std::vector<std::uint32_t> comp;
    comp.reserve(indices.size());
    for (int i : indices) comp.push_back(g.component_index(i));
    return sub.make(std::move(comp));
}

std::uint64_t ProductGroup::encode(const std::uint32_t* comp) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        code |= static_cast<std::uint64_t>(comp[i]) << shift_[i];
    return code;
}

void ProductGroup::decode(std::uint64_t code, std::uint32_t* comp) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const int bits = realized_[i]->bits();
        comp[i] = static_cast<std::uint32_t>((code >> shift_[i]) & ((std::uint64_t{1} << bits) - 1));
    }
}

ProductElement ProductGroup::decode(std::uint64_t code) const {
    std::vector<std::uint32_t> comp(factors_.size());
    decode(code, comp.data());
    return ProductElement(this, std::move(comp));
}

ProductElement ProductGroup::random_element(Rng& rng) const {
    std::vector<std::uint32_t> comp(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        comp[i] = static_cast<std::uint32_t>(rng.below(realized_[i]->order()));
    return ProductElement(this, std::move(comp));
}

std::string ProductGroup::describe() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " x ";
        out += factors_[i].name();
    }
    return out;
}

bool ProductGroup::compatible_with(const ProductGroup& other) const {
    if (this == &other) return true;
    if (arity() != other.arity()) return false;
    for (int i = 0; i < arity(); ++i)
        if (realized_[i] != other.realized_[i]) return false;  // cache makes these shared
    return true;
}

bool is_generating(const std::vector<ProductElement>& elements, const ProductGroup& group,
                   std::uint64_t state_cap) {
    const int n = group.arity();
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& e : elements) {
        if (!group.compatible_with(e.group())) throw Error("element from a different group");
        gens.push_back(e.component_indices());
    }

    FlatU64Map seen;
    std::vector<std::uint64_t> queue;
    queue.push_back(0);
    bool inserted = false;
    seen.find_or_insert(0, 0, inserted);

    std::vector<std::uint32_t> cur(n), child(n);
    for (std::size_t at = 0; at < queue.size(); ++at) {
        group.decode(queue[at], cur.data());
        for (const auto& g : gens) {
            for (int i = 0; i < n; ++i) child[i] = group.realized(i).compose(cur[i], g[i]);
            const std::uint64_t code = group.encode(child.data());
            seen.find_or_insert(code, static_cast<std::uint32_t>(queue.size()), inserted);
            if (inserted) {
                queue.push_back(code);
                if (queue.size() > state_cap)
                    throw CapExceededError("closure walk exceeded the state cap", state_cap);
            }
        }
    }
    return Integer(queue.size()) == group.order();
}

bool is_generating(const std::vector<std::uint32_t>& element_indices, const RealizedFactor& factor) {
    std::vector<bool> seen(factor.order(), false);
    std::vector<std::uint32_t> queue;
    seen[0] = true;
    queue.push_back(0);
    for (std::size_t at = 0; at < queue.size(); ++at) {
        for (std::uint32_t g : element_indices) {
            std::uint32_t next = factor.compose(queue[at], g);
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    return queue.size() == factor.order();
}

}  // namespace diamforge
