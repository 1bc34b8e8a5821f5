#include "diamforge/lower_bound.hpp"

#include <algorithm>

#include "diamforge/errors.hpp"

namespace diamforge {

namespace {

void validate_instance(int m, int n) {
    if (m < 5 || m % 2 == 0) throw Error("the certified case needs m >= 5 odd");
    if (n < 2 || n % 2 == 1) throw Error("the certified case needs n >= 2 even");
}

}  // namespace

ExampleInstance build_example_generators(int m, int n, std::uint64_t element_cap) {
    validate_instance(m, n);

    ExampleInstance inst;
    inst.m = m;
    inst.n = n;
    inst.group = std::make_shared<ProductGroup>(
        std::vector<FactorDescriptor>(n, FactorDescriptor::alternating(m)), element_cap);

    // sigma = (1 2 ... m), tau_perm = (1 2 ... m-2); both even since m is odd
    std::vector<std::uint8_t> img(m);
    for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % m);
    const Permutation sigma{std::move(img)};
    img.assign(m, 0);
    for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < m - 2; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % (m - 2));
    const Permutation tau_perm{std::move(img)};

    const RealizedFactor& alt = inst.group->realized(0);
    const std::uint32_t sigma_idx = alt.index_of(sigma);
    const std::uint32_t tau_idx = alt.index_of(tau_perm);

    for (int i = 0; i <= n; ++i) {
        std::vector<std::uint32_t> comp(n, sigma_idx);
        if (i >= 1) comp[i - 1] = tau_idx;
        inst.raw_generators.push_back(inst.group->make(std::move(comp)));
    }
    inst.gens = GeneratingSet::normalize(*inst.group, inst.raw_generators);
    return inst;
}

std::int64_t potential(const ProductElement& g, int m, int n) {
    const ProductGroup& G = g.group();
    if (G.arity() != n) throw Error("element arity does not match n");
    std::int64_t sum = 0;
    // image table: row i = images of the i-th coordinate permutation
    std::vector<const std::vector<std::uint8_t>*> rows(n);
    for (int i = 0; i < n; ++i) {
        const Permutation& p = G.realized(i).permutation(g.component_index(i));
        if (p.degree() != m) throw Error("component degree does not match m");
        rows[i] = &p.images();
    }
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            const int a = (*rows[(i + 1) % n])[j];
            const int b = (*rows[i])[j];
            const int delta = ((a - b) % m + m) % m;
            sum += std::min(delta, m - delta);
        }
    }
    return sum;
}

LipschitzReport verify_lipschitz(const ExampleInstance& inst, std::uint64_t samples,
                                 std::uint64_t seed) {
    if (samples < 1) throw Error("need at least one sample");
    LipschitzReport report;
    report.m = inst.m;
    report.n = inst.n;
    report.samples = samples;
    report.seed = seed;

    // which normalized entries are s_0 or its inverse
    const std::uint64_t s0_enc = inst.group->encode(inst.raw_generators[0]);
    const std::uint64_t s0_inv_enc = inst.group->encode(inst.raw_generators[0].inverse());

    Rng rng(seed);
    for (std::uint64_t it = 0; it < samples; ++it) {
        const ProductElement g = inst.group->random_element(rng);
        const std::int64_t fg = potential(g, inst.m, inst.n);
        for (int k = 0; k < inst.gens.size(); ++k) {
            if (inst.gens.provenance(k) == Provenance::Identity) continue;
            const std::int64_t fgs = potential(g * inst.gens[k], inst.m, inst.n);
            const std::int64_t delta = fgs > fg ? fgs - fg : fg - fgs;
            const std::uint64_t enc = inst.group->encode(inst.gens[k]);
            if (enc == s0_enc || enc == s0_inv_enc)
                report.max_abs_delta_s0 = std::max(report.max_abs_delta_s0, delta);
            else
                report.max_abs_delta_other = std::max(report.max_abs_delta_other, delta);
        }
    }
    return report;
}

std::pair<Rational, Integer> lower_bound_value(int m, int n) {
    validate_instance(m, n);
    const Rational bound(Integer(m - 1) * (m - 1) * n, 20);
    return {bound, ceil_rational(bound)};
}

LowerBoundWitness certify_lower_bound(const ExampleInstance& inst, std::uint64_t samples,
                                      std::uint64_t seed) {
    LowerBoundWitness out;
    out.m = inst.m;
    out.n = inst.n;
    out.samples = samples;
    out.seed = seed;

    const int m = inst.m;
    const RealizedFactor& alt = inst.group->realized(0);

    if ((m - 1) / 2 % 2 == 0) {
        // eta = product of (k, k+(m-1)/2) transpositions is even here, so the
        // identity/eta pattern lies in the group
        std::vector<std::uint8_t> img(m);
        for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(i);
        const int half = (m - 1) / 2;
        for (int k = 0; k < half; ++k) std::swap(img[k], img[k + half]);
        const Permutation eta{std::move(img)};
        const std::uint32_t eta_idx = alt.index_of(eta);
        std::vector<std::uint32_t> comp(inst.n, 0);
        for (int i = 1; i < inst.n; i += 2) comp[i] = eta_idx;  // even 1-based slots
        out.witness_element = inst.group->make(std::move(comp));
        out.witness_exact = true;
    } else {
        // eta would be odd; certify with the best sampled even-permutation
        // tuple instead
        Rng rng(Rng(seed).split(0x77ULL).next());
        ProductElement best = inst.group->random_element(rng);
        std::int64_t best_f = potential(best, inst.m, inst.n);
        const std::uint64_t tries = std::max<std::uint64_t>(samples, 1000);
        for (std::uint64_t it = 0; it < tries; ++it) {
            ProductElement cand = inst.group->random_element(rng);
            const std::int64_t f = potential(cand, inst.m, inst.n);
            if (f > best_f) {
                best = cand;
                best_f = f;
            }
        }
        out.witness_element = best;
        out.witness_exact = false;
    }
    out.witness_f = potential(out.witness_element, inst.m, inst.n);

    const LipschitzReport lip = verify_lipschitz(inst, samples, seed);
    out.max_step_s0 = lip.max_abs_delta_s0;
    out.lipschitz_observed = std::max(lip.max_abs_delta_s0, lip.max_abs_delta_other);

    out.bound_paper = Rational(out.witness_f, 10);
    out.bound_paper_ceiling = ceil_rational(out.bound_paper);
    if (out.lipschitz_observed > 0) {
        out.bound_observed = Rational(out.witness_f, out.lipschitz_observed);
        out.bound_observed_ceiling = ceil_rational(out.bound_observed);
    }
    return out;
}

}  // namespace diamforge
