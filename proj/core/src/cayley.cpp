#include "diamforge/cayley.hpp"

#include <algorithm>
#include <thread>

#include "diamforge/errors.hpp"

namespace diamforge {

namespace {

struct Candidate {
    std::uint64_t enc;
    std::uint32_t parent;
    std::uint32_t via;
};

}  // namespace

int WordMap::distance_of_id(std::uint64_t id) const {
    auto it = std::upper_bound(level_end_.begin(), level_end_.end(), id);
    return static_cast<int>(it - level_end_.begin());
}

int WordMap::distance(const ProductElement& g) const {
    std::uint32_t id;
    if (!ids_.find(group_->encode(g), id)) throw Error("element not reached by this walk");
    return distance_of_id(id);
}

Word WordMap::word_of_id(std::uint64_t id) const {
    if (!has_words()) throw Error("walk was run without word tracking");
    std::vector<Letter> letters;
    while (id != 0) {
        letters.push_back(Letter{via_[id], false});
        id = parent_[id];
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
}

Word WordMap::word_of(const ProductElement& g) const {
    std::uint32_t id;
    if (!ids_.find(group_->encode(g), id)) throw Error("element not reached by this walk");
    return word_of_id(id);
}

WordMap run_layered_bfs(const ProductGroup& group, const std::vector<ProductElement>& gen_list,
                        const BfsOptions& opts) {
    const int n = group.arity();
    const int n_gens = static_cast<int>(gen_list.size());

    // flattened generator components; identity entries are skipped when
    // expanding but keep their index for word letters
    std::vector<std::uint32_t> gen_comp(static_cast<std::size_t>(n_gens) * n);
    std::vector<std::uint32_t> active;  // generator indices worth expanding
    for (int k = 0; k < n_gens; ++k) {
        for (int i = 0; i < n; ++i) gen_comp[static_cast<std::size_t>(k) * n + i] =
            gen_list[k].component_index(i);
        if (!gen_list[k].is_identity()) active.push_back(static_cast<std::uint32_t>(k));
    }

    WordMap map;
    map.group_ = &group;
    map.enc_.push_back(group.encode(group.identity()));
    bool inserted = false;
    map.ids_.find_or_insert(map.enc_[0], 0, inserted);
    map.level_end_.push_back(1);
    if (opts.want_words) {
        map.parent_.push_back(0);
        map.via_.push_back(0);
    }

    const int threads = std::max(1, opts.threads);
    std::uint64_t level_lo = 0, level_hi = 1;
    int depth = 0;

    std::vector<std::vector<Candidate>> buffers(threads);

    while (level_hi > level_lo && (opts.max_depth < 0 || depth < opts.max_depth)) {
        const std::uint64_t span = level_hi - level_lo;
        const int used = span >= 2048 ? threads : 1;

        auto expand = [&](int chunk, std::vector<Candidate>& out) {
            out.clear();
            const std::uint64_t lo = level_lo + span * chunk / used;
            const std::uint64_t hi = level_lo + span * (chunk + 1) / used;
            std::vector<std::uint32_t> cur(n), child(n);
            for (std::uint64_t id = lo; id < hi; ++id) {
                group.decode(map.enc_[id], cur.data());
                for (std::uint32_t k : active) {
                    const std::uint32_t* g = &gen_comp[static_cast<std::size_t>(k) * n];
                    for (int i = 0; i < n; ++i) child[i] = group.realized(i).compose(cur[i], g[i]);
                    const std::uint64_t code = group.encode(child.data());
                    if (!map.ids_.contains(code))
                        out.push_back(Candidate{code, static_cast<std::uint32_t>(id), k});
                }
            }
        };

        if (used == 1) {
            expand(0, buffers[0]);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < used; ++t)
                pool.emplace_back([&, t] { expand(t, buffers[t]); });
            for (auto& th : pool) th.join();
        }

        // canonical merge: chunks cover ascending id ranges, and inside a
        // chunk candidates appear in (parent, generator) order, so scanning
        // buffers in order assigns the shortlex-minimal witness first
        for (int t = 0; t < used; ++t) {
            for (const Candidate& c : buffers[t]) {
                const auto next_id = static_cast<std::uint32_t>(map.enc_.size());
                map.ids_.find_or_insert(c.enc, next_id, inserted);
                if (!inserted) continue;
                map.enc_.push_back(c.enc);
                if (opts.want_words) {
                    map.parent_.push_back(c.parent);
                    map.via_.push_back(c.via);
                }
                if (map.enc_.size() > opts.state_cap)
                    throw CapExceededError("walk exceeded the state cap", opts.state_cap);
            }
        }

        level_lo = level_hi;
        level_hi = map.enc_.size();
        if (level_hi > level_lo) {
            map.level_end_.push_back(level_hi);
            ++depth;
        }
    }

    map.stabilized_ = (level_hi == level_lo);
    return map;
}

namespace {
std::vector<ProductElement> entries_of(const GeneratingSet& gens) {
    std::vector<ProductElement> list;
    list.reserve(gens.size());
    for (int k = 0; k < gens.size(); ++k) list.push_back(gens[k]);
    return list;
}
}  // namespace

DiameterResult bfs_diameter(const ProductGroup& group, const GeneratingSet& gens,
                            BfsOptions opts) {
    opts.max_depth = -1;
    WordMap map = run_layered_bfs(group, entries_of(gens), opts);
    if (Integer(map.size()) != group.order())
        throw NotGeneratingError("closure has " + std::to_string(map.size()) + " of " +
                                 group.order().str() + " elements");
    DiameterResult res;
    res.diameter = map.depth();
    res.reached = map.size();
    if (opts.want_words) res.words = std::move(map);
    return res;
}

WordMap ball(const GeneratingSet& gens, int k, BfsOptions opts) {
    if (k < 0) throw Error("ball radius must be >= 0");
    opts.max_depth = k;
    opts.want_words = true;
    return run_layered_bfs(gens.group(), entries_of(gens), opts);
}

std::vector<std::uint64_t> closure_encodings(const ProductGroup& group,
                                             const std::vector<ProductElement>& elements,
                                             std::uint64_t state_cap) {
    const int n = group.arity();
    FlatU64Map seen;
    std::vector<std::uint64_t> queue;
    queue.push_back(0);
    bool inserted = false;
    seen.find_or_insert(0, 0, inserted);

    std::vector<std::uint32_t> cur(n), child(n);
    for (std::size_t at = 0; at < queue.size(); ++at) {
        group.decode(queue[at], cur.data());
        for (const auto& e : elements) {
            for (int i = 0; i < n; ++i)
                child[i] = group.realized(i).compose(cur[i], e.component_index(i));
            const std::uint64_t code = group.encode(child.data());
            seen.find_or_insert(code, static_cast<std::uint32_t>(queue.size()), inserted);
            if (inserted) {
                queue.push_back(code);
                if (queue.size() > state_cap)
                    throw CapExceededError("closure exceeded the state cap", state_cap);
            }
        }
    }
    return queue;
}

Word FactorBfs::word_of(std::uint32_t idx) const {
    if (dist[idx] < 0) throw Error("element not reached in factor walk");
    std::vector<Letter> letters;
    while (idx != 0) {
        letters.push_back(Letter{via[idx], false});
        idx = parent[idx];
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
}

FactorBfs factor_bfs(const RealizedFactor& factor, const std::vector<std::uint32_t>& gen_images) {
    const std::uint32_t order = static_cast<std::uint32_t>(factor.order());
    FactorBfs out;
    out.dist.assign(order, -1);
    out.parent.assign(order, 0);
    out.via.assign(order, 0);

    std::vector<std::uint32_t> frontier{0}, next;
    out.dist[0] = 0;
    out.order.push_back(0);
    std::uint32_t reached = 1;
    int depth = 0;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint32_t at : frontier) {
            for (std::uint32_t k = 0; k < gen_images.size(); ++k) {
                const std::uint32_t to = factor.compose(at, gen_images[k]);
                if (out.dist[to] >= 0) continue;
                out.dist[to] = depth + 1;
                out.parent[to] = at;
                out.via[to] = k;
                next.push_back(to);
                out.order.push_back(to);
                ++reached;
            }
        }
        if (!next.empty()) ++depth;
        frontier.swap(next);
    }
    out.diameter = depth;
    out.complete = (reached == order);
    return out;
}

}  // namespace diamforge
