#include "diamforge/constructive.hpp"

#include <algorithm>
#include <functional>

#include "diamforge/conjugacy.hpp"
#include "diamforge/errors.hpp"

namespace diamforge {

namespace {

std::vector<std::uint32_t> projected_images(const GeneratingSet& gens, int factor) {
    std::vector<std::uint32_t> images(gens.size());
    for (int k = 0; k < gens.size(); ++k)
        images[k] = static_cast<std::uint32_t>(gens[k].component_index(factor));
    return images;
}

BfsOptions bfs_options(const ExecConfig& cfg, bool want_words) {
    BfsOptions opts;
    opts.state_cap = cfg.caps.state_cap;
    opts.threads = cfg.threads;
    opts.want_words = want_words;
    return opts;
}

// shared scratch so a decomposer computes the ball, the Schreier certificates
// and the commutator expressions once per (G, S)
struct BuildCtx {
    const ProductGroup& group;
    const GeneratingSet& gens;
    ExecConfig cfg;
    int d;

    std::optional<WordMap> ball_d;
    std::map<int, SchreierCertificate> schreier;
    std::map<std::pair<int, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>> ore;

    const WordMap& get_ball() {
        if (!ball_d) ball_d = ball(gens, d, bfs_options(cfg, true));
        return *ball_d;
    }

    const SchreierCertificate& get_schreier(int j) {
        auto it = schreier.find(j);
        if (it == schreier.end())
            it = schreier.emplace(j, schreier_generators(group, gens, j, cfg)).first;
        return it->second;
    }

    std::pair<std::uint32_t, std::uint32_t> get_ore(int factor, std::uint32_t value) {
        auto key = std::make_pair(factor, value);
        auto it = ore.find(key);
        if (it == ore.end())
            it = ore.emplace(key, ore_decompose(group.realized(factor), value, cfg.seed)).first;
        return it->second;
    }
};

// degenerate covering of factor i: lift the factor walk through S
CoveringSet ball_covering(BuildCtx& ctx, int i) {
    const RealizedFactor& target = ctx.group.realized(i);
    FactorBfs walk = factor_bfs(target, projected_images(ctx.gens, i));
    if (!walk.complete)
        throw NotGeneratingError("generating set does not project onto factor " +
                                 std::to_string(i + 1));
    if (walk.diameter > ctx.d)
        throw Error("d = " + std::to_string(ctx.d) + " is below the diameter of factor " +
                    std::to_string(i + 1));

    CoveringSet out;
    out.target = i;
    out.word_budget = ctx.d;
    out.element_by_value.reserve(target.order());
    out.word_by_value.reserve(target.order());
    for (std::uint32_t t = 0; t < target.order(); ++t) {
        Word w = walk.word_of(t);
        out.element_by_value.push_back(ctx.gens.evaluate(w));
        out.word_by_value.push_back(std::move(w));
    }
    return out;
}

CoveringSet cover_impl(BuildCtx& ctx, int i, std::optional<int> j) {
    const ProductGroup& G = ctx.group;
    if (i < 0 || i >= G.arity()) throw Error("target factor index out of range");
    if (!j) return ball_covering(ctx, i);
    if (*j < 0 || *j >= G.arity()) throw Error("killed factor index out of range");
    if (*j == i) throw Error("target and killed factor must differ");

    const RealizedFactor& target = G.realized(i);
    {
        // the spread below needs S^d to reach all of T_i
        FactorBfs walk = factor_bfs(target, projected_images(ctx.gens, i));
        if (!walk.complete)
            throw NotGeneratingError("generating set does not project onto factor " +
                                     std::to_string(i + 1));
        if (walk.diameter > ctx.d)
            throw Error("d below the diameter of factor " + std::to_string(i + 1));
    }

    // Schreier element that is trivial at j but not at i; the kernel
    // generators reach the whole kernel, so one of them must move factor i
    const SchreierCertificate& cert = ctx.get_schreier(*j);
    const ProductElement* x = nullptr;
    const Word* x_word = nullptr;
    for (std::size_t k = 0; k < cert.kernel_gens.size(); ++k) {
        if (cert.kernel_gens[k].component_index(i) != 0) {
            x = &cert.kernel_gens[k];
            x_word = &cert.kernel_gen_words[k];
            break;
        }
    }
    if (!x)
        throw InternalInvariantError("no Schreier generator moves factor " + std::to_string(i + 1));
    if (x_word->length() > 2 * ctx.d + 1)
        throw InternalInvariantError("Schreier element word exceeds 2d+1");

    WordedElements spread = conjugate_spread(G, ctx.gens, *x, *x_word, ctx.d, ctx.cfg);

    // power the spread until it is surjective on T_i; the conjugacy diameter
    // bound caps the number of layers needed
    const int xi = classify_constant(G.factor(i));
    const int n = G.arity();

    std::vector<std::uint64_t> enc{0};
    std::vector<std::uint32_t> parent{0}, via{0};
    std::vector<std::uint32_t> word_len{0};
    FlatU64Map ids;
    bool inserted = false;
    ids.find_or_insert(0, 0, inserted);

    auto word_of_state = [&](std::uint32_t id) {
        std::vector<std::uint32_t> path;
        while (id != 0) {
            path.push_back(via[id]);
            id = parent[id];
        }
        Word w;
        for (auto it = path.rbegin(); it != path.rend(); ++it) w.append(spread.words[*it]);
        return w;
    };

    const std::uint32_t order_i = static_cast<std::uint32_t>(target.order());
    std::vector<std::int64_t> best_len(order_i, -1);
    std::vector<std::uint32_t> best_state(order_i, 0);
    std::vector<std::uint32_t> scratch(n);
    std::uint32_t filled = 0;
    auto consider = [&](std::uint32_t id) {
        G.decode(enc[id], scratch.data());
        const std::uint32_t t = scratch[i];
        if (best_len[t] < 0) {
            best_len[t] = word_len[id];
            best_state[t] = id;
            ++filled;
        } else if (word_len[id] < best_len[t] ||
                   (word_len[id] == best_len[t] &&
                    shortlex_less(word_of_state(id), word_of_state(best_state[t])))) {
            best_len[t] = word_len[id];
            best_state[t] = id;
        }
    };
    consider(0);

    std::vector<std::uint32_t> cur(n), child(n);
    std::uint64_t level_lo = 0, level_hi = 1;
    for (int layer = 1; layer <= xi && filled < order_i; ++layer) {
        for (std::uint64_t at = level_lo; at < level_hi; ++at) {
            G.decode(enc[at], cur.data());
            for (std::uint32_t k = 0; k < spread.elements.size(); ++k) {
                const ProductElement& s = spread.elements[k];
                if (s.is_identity()) continue;
                for (int f = 0; f < n; ++f)
                    child[f] = G.realized(f).compose(cur[f], s.component_index(f));
                const std::uint64_t code = G.encode(child.data());
                const auto next_id = static_cast<std::uint32_t>(enc.size());
                ids.find_or_insert(code, next_id, inserted);
                if (!inserted) continue;
                enc.push_back(code);
                parent.push_back(static_cast<std::uint32_t>(at));
                via.push_back(k);
                word_len.push_back(word_len[at] +
                                   static_cast<std::uint32_t>(spread.words[k].length()));
                if (enc.size() > ctx.cfg.caps.state_cap)
                    throw CapExceededError("covering walk exceeded the state cap",
                                           ctx.cfg.caps.state_cap);
                consider(next_id);
            }
        }
        level_lo = level_hi;
        level_hi = enc.size();
        if (level_hi == level_lo) break;
    }
    if (filled < order_i)
        throw InternalInvariantError("spread powers failed to cover factor " +
                                     std::to_string(i + 1) + " within its class bound");

    CoveringSet out;
    out.target = i;
    out.killed = {*j};
    out.word_budget = Integer(xi) * (4 * Integer(ctx.d) + 1);
    out.element_by_value.reserve(order_i);
    out.word_by_value.reserve(order_i);
    for (std::uint32_t t = 0; t < order_i; ++t) {
        const std::uint32_t id = best_state[t];
        ProductElement e = G.decode(enc[id]);
        Word w = word_of_state(id);
        if (e.component_index(*j) != 0)
            throw InternalInvariantError("covering element is not trivial at the killed factor");
        if (Integer(w.length()) > out.word_budget)
            throw InternalInvariantError("covering word exceeds its budget");
        out.element_by_value.push_back(std::move(e));
        out.word_by_value.push_back(std::move(w));
    }
    return out;
}

using OreProvider = std::function<std::pair<std::uint32_t, std::uint32_t>(std::uint32_t)>;

CoveringSet tree_combine_range(const std::vector<CoveringSet>& sets, std::size_t lo,
                               std::size_t hi, int target, const ProductGroup& G,
                               const OreProvider& ore) {
    if (hi - lo == 1) return sets[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    CoveringSet left = tree_combine_range(sets, lo, mid, target, G, ore);
    CoveringSet right = tree_combine_range(sets, mid, hi, target, G, ore);

    CoveringSet out;
    out.target = target;
    out.killed = left.killed;
    out.killed.insert(out.killed.end(), right.killed.begin(), right.killed.end());
    std::sort(out.killed.begin(), out.killed.end());
    out.word_budget = 4 * std::max(left.word_budget, right.word_budget);

    const std::uint32_t order = static_cast<std::uint32_t>(G.realized(target).order());
    out.element_by_value.reserve(order);
    out.word_by_value.reserve(order);
    for (std::uint32_t t = 0; t < order; ++t) {
        const auto [t1, t2] = ore(t);
        const ProductElement& x1 = left.element_by_value[t1];
        const ProductElement& x2 = right.element_by_value[t2];
        ProductElement e = commutator(x1, x2);
        if (e.component_index(target) != t)
            throw InternalInvariantError("commutator does not hit the requested value");
        for (int j : out.killed)
            if (e.component_index(j) != 0)
                throw InternalInvariantError("commutator is not trivial at a killed factor");
        Word w = left.word_by_value[t1] + right.word_by_value[t2] +
                 left.word_by_value[t1].inverted() + right.word_by_value[t2].inverted();
        if (Integer(w.length()) > out.word_budget)
            throw InternalInvariantError("combined word exceeds its budget");
        out.element_by_value.push_back(std::move(e));
        out.word_by_value.push_back(std::move(w));
    }
    return out;
}

CoveringSet tree_combine_impl(const std::vector<CoveringSet>& sets, int target,
                              const ProductGroup& G, const OreProvider& ore) {
    if (sets.empty()) throw Error("empty index set: nothing to combine");
    for (const auto& s : sets) {
        if (s.target != target) throw Error("covering sets target different factors");
        if (s.killed.size() != 1) throw Error("tree inputs must each kill exactly one factor");
    }
    std::vector<CoveringSet> ordered = sets;
    std::sort(ordered.begin(), ordered.end(),
              [](const CoveringSet& a, const CoveringSet& b) { return a.killed[0] < b.killed[0]; });
    return tree_combine_range(ordered, 0, ordered.size(), target, G, ore);
}

}  // namespace

SchreierCertificate schreier_generators(const ProductGroup& group, const GeneratingSet& gens,
                                        int kill, const ExecConfig& cfg) {
    if (kill < 0 || kill >= group.arity()) throw Error("factor index out of range");
    const RealizedFactor& quotient = group.realized(kill);

    FactorBfs walk = factor_bfs(quotient, projected_images(gens, kill));
    if (!walk.complete)
        throw NotGeneratingError("generating set does not project onto factor " +
                                 std::to_string(kill + 1));

    SchreierCertificate cert;
    cert.killed_factor = kill;
    cert.quotient_diameter = walk.diameter;
    const int d = walk.diameter;

    const std::uint32_t cosets = static_cast<std::uint32_t>(quotient.order());
    cert.coset_rep.reserve(cosets);
    cert.coset_rep_word.reserve(cosets);
    for (std::uint32_t t = 0; t < cosets; ++t) {
        Word w = walk.word_of(t);
        ProductElement rep = gens.evaluate(w);
        if (rep.component_index(kill) != t)
            throw InternalInvariantError("coset representative projects to the wrong coset");
        cert.coset_rep.push_back(std::move(rep));
        cert.coset_rep_word.push_back(std::move(w));
    }

    // Schreier elements tau(x) s tau(tau(x) s)^-1, walked in coset discovery
    // order so earlier (shorter) representatives come first
    FlatU64Map seen;
    bool inserted = false;
    for (std::uint32_t x : walk.order) {
        for (int k = 0; k < gens.size(); ++k) {
            if (k == gens.identity_index()) continue;
            ProductElement u = cert.coset_rep[x] * gens[k];
            const std::uint32_t c = static_cast<std::uint32_t>(u.component_index(kill));
            ProductElement kg = u * cert.coset_rep[c].inverse();
            if (kg.is_identity()) continue;
            seen.find_or_insert(group.encode(kg),
                                static_cast<std::uint32_t>(cert.kernel_gens.size()), inserted);
            if (!inserted) continue;
            Word w = cert.coset_rep_word[x];
            w.push_back(Letter{static_cast<std::uint32_t>(k), false});
            w.append(cert.coset_rep_word[c].inverted());
            if (w.length() > 2 * d + 1)
                throw InternalInvariantError("Schreier word exceeds 2d+1");
            if (kg.component_index(kill) != 0)
                throw InternalInvariantError("Schreier element is outside the kernel");
            cert.kernel_gens.push_back(std::move(kg));
            cert.kernel_gen_words.push_back(std::move(w));
        }
    }

    // the certificate is only as good as the closure it claims
    const Integer expected = group.order() / Integer(quotient.order());
    const auto closure = closure_encodings(group, cert.kernel_gens, cfg.caps.state_cap);
    if (Integer(closure.size()) != expected)
        throw NotGeneratingError("kernel generators close to " + std::to_string(closure.size()) +
                                 " elements, kernel has " + expected.str());
    return cert;
}

WordedElements conjugate_spread(const ProductGroup& group, const GeneratingSet& gens,
                                const ProductElement& x, const Word& x_word, int d,
                                const ExecConfig& cfg) {
    if (d < 0) throw Error("d must be >= 0");
    if (x_word.length() > 2 * d + 1) throw Error("x must carry a word of length <= 2d+1");

    const WordMap ball_d = ball(gens, d, bfs_options(cfg, true));

    WordedElements out;
    FlatU64Map seen;
    bool inserted = false;
    auto add = [&](ProductElement e, Word w) {
        seen.find_or_insert(group.encode(e), static_cast<std::uint32_t>(out.elements.size()),
                            inserted);
        if (!inserted) return;
        if (w.length() > 4 * d + 1)
            throw InternalInvariantError("spread word exceeds 4d+1");
        out.elements.push_back(std::move(e));
        out.words.push_back(std::move(w));
    };

    add(group.identity(), Word{});
    const ProductElement xinv = x.inverse();
    const Word xinv_word = x_word.inverted();
    for (int pass = 0; pass < 2; ++pass) {
        const ProductElement& mid = pass == 0 ? x : xinv;
        const Word& mid_word = pass == 0 ? x_word : xinv_word;
        for (std::uint64_t id = 0; id < ball_d.size(); ++id) {
            const ProductElement y = ball_d.element_at(id);
            const Word wy = ball_d.word_of_id(id);
            add(y * mid * y.inverse(), wy + mid_word + wy.inverted());
        }
    }
    return out;
}

CoveringSet cover_component_kill_one(const ProductGroup& group, const GeneratingSet& gens, int i,
                                     std::optional<int> j, int d, const ExecConfig& cfg) {
    BuildCtx ctx{group, gens, cfg, d, std::nullopt, {}, {}};
    return cover_impl(ctx, i, j);
}

CoveringSet commutator_tree_combine(const std::vector<CoveringSet>& sets, int target,
                                    const ExecConfig& cfg) {
    if (sets.empty()) throw Error("empty index set: nothing to combine");
    const ProductGroup& G = sets[0].element_by_value.at(0).group();
    std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> cache;
    OreProvider ore = [&](std::uint32_t t) {
        auto it = cache.find(t);
        if (it == cache.end())
            it = cache.emplace(t, ore_decompose(G.realized(target), t, cfg.seed)).first;
        return it->second;
    };
    return tree_combine_impl(sets, target, G, ore);
}

NonabelianDecomposer::NonabelianDecomposer(const ProductGroup& group, const GeneratingSet& gens,
                                           ExecConfig cfg)
    : group_(&group), gens_(&gens), cfg_(cfg) {
    if (!group.all_nonabelian())
        throw AbelianFactorError("decompose requires every factor non-abelian");

    BuildCtx ctx{group, gens, cfg, 0, std::nullopt, {}, {}};
    int d = 0;
    for (int i = 0; i < group.arity(); ++i) {
        FactorBfs walk = factor_bfs(group.realized(i), projected_images(gens, i));
        if (!walk.complete)
            throw NotGeneratingError("generating set does not project onto factor " +
                                     std::to_string(i + 1));
        d = std::max(d, walk.diameter);
    }
    ctx.d = d_ = d;

    std::vector<FactorDescriptor> descriptors;
    for (int i = 0; i < group.arity(); ++i) descriptors.push_back(group.factor(i));
    bound_ = nonabelian_bound(descriptors, d_);
    sharp_budget_ = numerator(bound_.sharp_sum_value);

    coverings_.push_back(cover_impl(ctx, 0, std::nullopt));
    for (int i = 1; i < group.arity(); ++i) {
        std::vector<CoveringSet> parts;
        parts.reserve(i);
        for (int j = 0; j < i; ++j) parts.push_back(cover_impl(ctx, i, j));
        OreProvider ore = [&](std::uint32_t t) { return ctx.get_ore(i, t); };
        coverings_.push_back(tree_combine_impl(parts, i, group, ore));
    }
}

Word NonabelianDecomposer::decompose(const ProductElement& g) const {
    if (!group_->compatible_with(g.group())) throw Error("element from a different group");
    Word out;
    ProductElement h = g;
    for (int i = 0; i < group_->arity(); ++i) {
        const CoveringSet& cover = coverings_[i];
        const std::uint32_t t = h.component_index(i);
        out.append(cover.word_by_value[t]);
        h = cover.element_by_value[t].inverse() * h;
    }
    if (!h.is_identity())
        throw InternalInvariantError("peel left a nontrivial residual; covering tables are wrong");
    if (Integer(out.length()) > sharp_budget_)
        throw InternalInvariantError("decomposition exceeds the sharp budget");
    return out;
}

AbelianDecomposer::AbelianDecomposer(const ProductGroup& group, const GeneratingSet& gens,
                                     ExecConfig cfg)
    : group_(&group), gens_(&gens) {
    if (!group.all_abelian())
        throw AbelianFactorError("abelian decomposition requires every factor cyclic");

    {
        std::vector<ProductElement> entries;
        for (int k = 0; k < gens.size(); ++k) entries.push_back(gens[k]);
        if (!is_generating(entries, group, cfg.caps.state_cap))
            throw NotGeneratingError("the given set does not generate the group");
    }

    std::map<std::uint64_t, std::vector<int>> by_prime;
    for (int i = 0; i < group.arity(); ++i)
        by_prime[group.realized(i).modulus()].push_back(i);

    std::vector<std::pair<std::uint64_t, int>> prime_powers;
    std::uint64_t steps = 1;
    for (const auto& [p, slots] : by_prime) {
        Block block;
        block.prime = p;
        block.slots = slots;
        block.steps = steps;
        prime_powers.emplace_back(p, static_cast<int>(slots.size()));

        // powered generator images over this prime's slots
        const std::uint64_t mult = steps % p;
        std::vector<std::vector<std::uint32_t>> powered(gens.size());
        for (int k = 0; k < gens.size(); ++k) {
            powered[k].reserve(slots.size());
            for (int slot : slots)
                powered[k].push_back(static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(gens[k].component_index(slot)) * mult) % p));
        }

        // greedy echelon basis in generator order
        const std::size_t e = slots.size();
        std::vector<std::vector<std::uint64_t>> rows;     // normalized echelon rows
        std::vector<std::size_t> pivot_of;                // pivot column per row
        auto mod_pow = [&](std::uint64_t a, std::uint64_t ex) {
            std::uint64_t r = 1;
            a %= p;
            while (ex) {
                if (ex & 1) r = r * a % p;
                a = a * a % p;
                ex >>= 1;
            }
            return r;
        };
        for (int k = 0; k < gens.size() && block.basis_gens.size() < e; ++k) {
            std::vector<std::uint64_t> v(powered[k].begin(), powered[k].end());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const std::uint64_t c = v[pivot_of[r]] % p;
                if (c == 0) continue;
                for (std::size_t s = 0; s < e; ++s) v[s] = (v[s] + (p - c) * rows[r][s]) % p;
            }
            std::size_t pivot = e;
            for (std::size_t s = 0; s < e; ++s)
                if (v[s] % p != 0) {
                    pivot = s;
                    break;
                }
            if (pivot == e) continue;
            const std::uint64_t inv = mod_pow(v[pivot], p - 2);
            for (std::size_t s = 0; s < e; ++s) v[s] = v[s] * inv % p;
            rows.push_back(v);
            pivot_of.push_back(pivot);
            block.basis_gens.push_back(k);
            block.basis_vectors.push_back(powered[k]);
        }
        if (block.basis_gens.size() != e)
            throw InternalInvariantError("no generator basis found for prime " + std::to_string(p));

        blocks_.push_back(std::move(block));
        if (steps > (std::uint64_t{1} << 40) / p)
            throw CapExceededError("abelian word budget too large to materialize", 1ULL << 40);
        steps *= p;
    }

    bound_ = abelian_bound(prime_powers);
    sharp_budget_ = numerator(bound_.sharp_sum_value);
}

Word AbelianDecomposer::decompose(const ProductElement& g) const {
    if (!group_->compatible_with(g.group())) throw Error("element from a different group");
    Word out;
    ProductElement h = g;
    for (const Block& block : blocks_) {
        const std::uint64_t p = block.prime;
        const std::size_t e = block.slots.size();

        // solve basis * c = h's block components over F_p
        std::vector<std::vector<std::uint64_t>> m(e, std::vector<std::uint64_t>(e + 1));
        for (std::size_t row = 0; row < e; ++row) {
            for (std::size_t col = 0; col < e; ++col) m[row][col] = block.basis_vectors[col][row];
            m[row][e] = h.component_index(block.slots[row]);
        }
        auto mod_pow = [&](std::uint64_t a, std::uint64_t ex) {
            std::uint64_t r = 1;
            a %= p;
            while (ex) {
                if (ex & 1) r = r * a % p;
                a = a * a % p;
                ex >>= 1;
            }
            return r;
        };
        for (std::size_t col = 0, row = 0; col < e && row < e; ++col) {
            std::size_t sel = row;
            while (sel < e && m[sel][col] % p == 0) ++sel;
            if (sel == e) throw InternalInvariantError("singular basis matrix");
            std::swap(m[sel], m[row]);
            const std::uint64_t inv = mod_pow(m[row][col], p - 2);
            for (std::size_t s = col; s <= e; ++s) m[row][s] = m[row][s] * inv % p;
            for (std::size_t r2 = 0; r2 < e; ++r2) {
                if (r2 == row) continue;
                const std::uint64_t c = m[r2][col] % p;
                if (c == 0) continue;
                for (std::size_t s = col; s <= e; ++s)
                    m[r2][s] = (m[r2][s] + (p - c) * m[row][s]) % p;
            }
            ++row;
        }

        Word block_word;
        for (std::size_t l = 0; l < e; ++l) {
            const std::uint64_t c = m[l][e] % p;
            if (c == 0) continue;
            // reduce to the signed range [-floor(p/2), floor(p/2)]
            const bool negative = c > p / 2;
            const std::uint64_t magnitude = negative ? p - c : c;
            const Letter letter{static_cast<std::uint32_t>(block.basis_gens[l]), negative};
            for (std::uint64_t rep = 0; rep < magnitude * block.steps; ++rep)
                block_word.push_back(letter);
        }
        h = gens_->evaluate(block_word).inverse() * h;
        out.append(block_word);
    }
    if (!h.is_identity())
        throw InternalInvariantError("abelian peel left a nontrivial residual");
    if (Integer(out.length()) > sharp_budget_)
        throw InternalInvariantError("abelian word exceeds the sharp budget");
    return out;
}

MixedDecomposer::MixedDecomposer(const ProductGroup& group, const GeneratingSet& gens,
                                 ExecConfig cfg)
    : group_(&group), gens_(&gens), cfg_(cfg) {
    if (group.abelian_indices().empty() || group.nonabelian_indices().empty())
        throw Error("mixed decomposition needs both abelian and non-abelian factors");

    sub_abelian_ = std::make_unique<ProductGroup>(group.subproduct(group.abelian_indices()));
    sub_nonabelian_ = std::make_unique<ProductGroup>(group.subproduct(group.nonabelian_indices()));

    auto project_gens = [&](const ProductGroup& sub, const std::vector<int>& idx) {
        std::vector<ProductElement> list;
        list.reserve(gens.size());
        for (int k = 0; k < gens.size(); ++k) list.push_back(group.project_to(gens[k], idx, sub));
        return list;
    };

    words_abelian_ = run_layered_bfs(*sub_abelian_, project_gens(*sub_abelian_, group.abelian_indices()),
                                     bfs_options(cfg, true));
    if (Integer(words_abelian_.size()) != sub_abelian_->order())
        throw NotGeneratingError("generating set does not project onto the abelian part");
    d_abelian_ = words_abelian_.depth();

    words_nonabelian_ = run_layered_bfs(*sub_nonabelian_,
                                        project_gens(*sub_nonabelian_, group.nonabelian_indices()),
                                        bfs_options(cfg, true));
    if (Integer(words_nonabelian_.size()) != sub_nonabelian_->order())
        throw NotGeneratingError("generating set does not project onto the non-abelian part");
    d_nonabelian_ = words_nonabelian_.depth();

    bound_ = mixed_bound(d_abelian_, d_nonabelian_);
}

Word MixedDecomposer::decompose(const ProductElement& g) const {
    if (!group_->compatible_with(g.group())) throw Error("element from a different group");
    const auto& a_idx = group_->abelian_indices();
    const auto& na_idx = group_->nonabelian_indices();

    const ProductElement g_abelian = group_->project_to(g, a_idx, *sub_abelian_);
    Word out = words_abelian_.word_of(g_abelian);
    const ProductElement x_a = gens_->evaluate(out);

    // what the commutator still has to produce on the non-abelian part
    const ProductElement target = group_->project_to(x_a, na_idx, *sub_nonabelian_).inverse() *
                                  group_->project_to(g, na_idx, *sub_nonabelian_);
    if (!target.is_identity()) {
        std::vector<std::uint32_t> us, vs;
        for (int k = 0; k < sub_nonabelian_->arity(); ++k) {
            const RealizedFactor* f = &sub_nonabelian_->realized(k);
            const auto key = std::make_pair(f, static_cast<std::uint32_t>(target.component_index(k)));
            auto it = ore_cache_.find(key);
            if (it == ore_cache_.end())
                it = ore_cache_.emplace(key, ore_decompose(*f, key.second, cfg_.seed)).first;
            us.push_back(it->second.first);
            vs.push_back(it->second.second);
        }
        const Word wu = words_nonabelian_.word_of(sub_nonabelian_->make(std::move(us)));
        const Word wv = words_nonabelian_.word_of(sub_nonabelian_->make(std::move(vs)));
        out.append(wu);
        out.append(wv);
        out.append(wu.inverted());
        out.append(wv.inverted());
    }
    if (Integer(out.length()) > budget())
        throw InternalInvariantError("mixed word exceeds d_A + 4 d_NA");
    return out;
}

Word decompose(const ProductGroup& group, const GeneratingSet& gens, const ProductElement& g,
               const ExecConfig& cfg) {
    return NonabelianDecomposer(group, gens, cfg).decompose(g);
}

Word abelian_decompose(const ProductGroup& group, const GeneratingSet& gens,
                       const ProductElement& g, const ExecConfig& cfg) {
    return AbelianDecomposer(group, gens, cfg).decompose(g);
}

Word mixed_decompose(const ProductGroup& group, const GeneratingSet& gens,
                     const ProductElement& g, const ExecConfig& cfg) {
    return MixedDecomposer(group, gens, cfg).decompose(g);
}

}  // namespace diamforge
