#include "diamforge/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "diamforge/errors.hpp"

namespace diamforge {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int bits_for(std::uint64_t n) {  // width needed to address 0..n-1
    int b = 0;
    while ((std::uint64_t{1} << b) < n) ++b;
    return std::max(b, 1);
}

// Arithmetic tables for GF(q), q prime or q in {8, 9}. Elements are codes
// 0..q-1; for prime powers the code is the coefficient vector in base p.
struct SmallField {
    int q;
    std::vector<int> add;  // q*q
    std::vector<int> mul;  // q*q
    std::vector<int> neg;
    std::vector<int> inv;  // inv[0] unused

    explicit SmallField(int q_in) : q(q_in) {
        add.assign(q * q, 0);
        mul.assign(q * q, 0);
        neg.assign(q, 0);
        inv.assign(q, 0);
        if (is_prime(static_cast<std::uint64_t>(q))) {
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    add[a * q + b] = (a + b) % q;
                    mul[a * q + b] = (a * b) % q;
                }
        } else if (q == 8) {
            // F_2[x] / (x^3 + x + 1), codes are bit vectors
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    add[a * q + b] = a ^ b;
                    int prod = 0, aa = a;
                    for (int bit = 0; bit < 3; ++bit) {
                        if (b & (1 << bit)) prod ^= aa;
                        aa <<= 1;
                        if (aa & 8) aa = (aa & 7) ^ 3;  // reduce by x^3 = x + 1
                    }
                    mul[a * q + b] = prod;
                }
        } else if (q == 9) {
            // F_3[x] / (x^2 + 1), code = a0 + 3*a1
            auto pack = [](int a0, int a1) { return a0 + 3 * a1; };
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
                    add[a * q + b] = pack((a0 + b0) % 3, (a1 + b1) % 3);
                    // (a0 + a1 x)(b0 + b1 x) with x^2 = -1
                    int c0 = ((a0 * b0 - a1 * b1) % 3 + 3) % 3;
                    int c1 = (a0 * b1 + a1 * b0) % 3;
                    mul[a * q + b] = pack(c0, c1);
                }
        } else {
            throw Error("unsupported field size " + std::to_string(q));
        }
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if (add[a * q + b] == 0) neg[a] = b;
                if (a != 0 && mul[a * q + b] == 1) inv[a] = b;
            }
    }

    int primitive_element() const {
        for (int g = 1; g < q; ++g) {
            int x = g, ord = 1;
            while (x != 1) {
                x = mul[x * q + g];
                ++ord;
            }
            if (ord == q - 1) return g;
        }
        throw Error("no primitive element found");
    }
};

// Permutations of the projective line realizing PSL(2,q): translation,
// inversion-negation and multiplication by a square of a primitive element.
// Point indices: field codes 0..q-1, then infinity at index q.
std::vector<Permutation> psl2_generators(int q) {
    SmallField F(q);
    const int inf = q;
    const int degree = q + 1;

    auto make = [&](auto&& image_of) {
        std::vector<std::uint8_t> img(degree);
        for (int x = 0; x <= q; ++x) img[x] = static_cast<std::uint8_t>(image_of(x));
        return Permutation(std::move(img));
    };

    auto translate = make([&](int x) { return x == inf ? inf : F.add[x * q + 1]; });
    auto invert = make([&](int x) {
        if (x == inf) return 0;
        if (x == 0) return inf;
        return F.neg[F.inv[x]];  // x -> -1/x
    });
    int g = F.primitive_element();
    int k = (q % 2 == 0) ? g : F.mul[g * q + g];  // a square, so the map is in PSL
    auto scale = make([&](int x) { return x == inf ? inf : F.mul[k * q + x]; });
    return {translate, invert, scale};
}

std::vector<Permutation> alternating_generators(int m) {
    std::vector<std::uint8_t> cyc(m);
    if (m % 2 == 1) {
        for (int i = 0; i < m; ++i) cyc[i] = static_cast<std::uint8_t>((i + 1) % m);
    } else {
        cyc[0] = 0;  // (2 3 ... m): an (m-1)-cycle, even since m-1 is odd
        for (int i = 1; i < m; ++i) cyc[i] = static_cast<std::uint8_t>(i % (m - 1) + 1);
    }
    Permutation long_cycle{std::move(cyc)};
    Permutation three_cycle = Permutation::from_cycles("(1 2 3)", m);
    return {long_cycle, three_cycle};
}

std::vector<Permutation> m11_generators() {
    Permutation a = Permutation::from_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11);
    Permutation b = Permutation::from_cycles("(3 7 11 8)(4 10 5 6)", 11);
    return {a, b};
}

Integer factorial(int m) {
    Integer f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// realization cache, keyed by descriptor name
std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const RealizedFactor>>& realization_cache() {
    static std::map<std::string, std::shared_ptr<const RealizedFactor>> cache;
    return cache;
}

constexpr std::uint64_t kMultTableMaxOrder = 2600;  // Alt(7) still fits

}  // namespace

const Caps& default_caps() {
    static Caps caps = [] {
        Caps c;
        if (const char* env = std::getenv("DIAMFORGE_CAP")) {
            char* end = nullptr;
            std::uint64_t v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                c.element_cap = v;
                c.state_cap = v;
            }
        }
        return c;
    }();
    return caps;
}

FactorDescriptor FactorDescriptor::alternating(int m) {
    if (m < 5) throw Error("Alt(m) requires m >= 5 for simplicity");
    if (m > 16) throw Error("Alt(m) realization supports m <= 16");
    FactorDescriptor d;
    d.family_ = Family::Alternating;
    d.name_ = "Alt(" + std::to_string(m) + ")";
    d.alt_degree_ = m;
    d.perm_degree_ = m;
    d.perm_generators_ = alternating_generators(m);
    return d;
}

FactorDescriptor FactorDescriptor::psl2(int q) {
    if (q < 5 || (!is_prime(static_cast<std::uint64_t>(q)) && q != 8 && q != 9))
        throw Error("PSL(2,q) supported for prime q >= 5 and q in {8, 9}");
    if (q + 1 > 16) throw Error("PSL(2,q) realization supports q <= 15");
    FactorDescriptor d;
    d.family_ = Family::LieType;
    d.name_ = "PSL(2," + std::to_string(q) + ")";
    d.lie_rank_ = 1;  // declared, not derived
    d.lie_q_ = q;
    d.perm_degree_ = q + 1;
    d.perm_generators_ = psl2_generators(q);
    return d;
}

FactorDescriptor FactorDescriptor::m11() {
    FactorDescriptor d;
    d.family_ = Family::Sporadic;
    d.name_ = "M11";
    d.perm_degree_ = 11;
    d.perm_generators_ = m11_generators();
    return d;
}

FactorDescriptor FactorDescriptor::cyclic(std::uint64_t p) {
    if (!is_prime(p)) throw Error("Z/p requires p prime, got " + std::to_string(p));
    FactorDescriptor d;
    d.family_ = Family::Cyclic;
    d.name_ = "Z/" + std::to_string(p);
    d.prime_ = p;
    return d;
}

FactorDescriptor FactorDescriptor::sporadic(const std::string& name) {
    if (name == "M11" || name == "m11") return m11();
    FactorDescriptor d;
    d.family_ = Family::Sporadic;
    d.name_ = name;
    return d;
}

FactorDescriptor FactorDescriptor::lie_type(const std::string& name, int untwisted_rank) {
    if (untwisted_rank < 1) throw Error("untwisted rank must be >= 1");
    FactorDescriptor d;
    d.family_ = Family::LieType;
    d.name_ = name;
    d.lie_rank_ = untwisted_rank;
    return d;
}

std::optional<Integer> FactorDescriptor::known_order() const {
    switch (family_) {
        case Family::Cyclic:
            return Integer(prime_);
        case Family::Alternating:
            return factorial(alt_degree_) / 2;
        case Family::LieType: {
            if (lie_q_ == 0) return std::nullopt;
            Integer q = lie_q_;
            Integer n = q * (q * q - 1);
            return (lie_q_ % 2 == 0) ? n : n / 2;
        }
        case Family::Sporadic:
            if (name_ == "M11") return Integer(7920);
            return std::nullopt;
    }
    return std::nullopt;
}

bool FactorDescriptor::has_realization() const {
    return family_ == Family::Cyclic || !perm_generators_.empty();
}

std::shared_ptr<const RealizedFactor> FactorDescriptor::realize(std::uint64_t element_cap) const {
    if (!has_realization())
        throw Error(name_ + " is descriptor-only: no concrete realization available");

    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = realization_cache().find(name_);
        if (it != realization_cache().end() && it->second->order() <= element_cap)
            return it->second;
    }

    auto rf = std::shared_ptr<RealizedFactor>(new RealizedFactor());
    rf->descriptor_ = *this;
    if (family_ == Family::Cyclic) {
        if (prime_ > element_cap)
            throw CapExceededError("factor order above element cap: " + name_, element_cap);
        rf->modulus_ = prime_;
        rf->order_ = prime_;
        rf->bits_ = bits_for(prime_);
        rf->gen_idx_ = {1 % static_cast<std::uint32_t>(prime_)};
    } else {
        auto expected = known_order();
        if (expected && *expected > element_cap)
            throw CapExceededError("factor order above element cap: " + name_, element_cap);
        rf->build_from_generators(element_cap);
        if (expected && Integer(rf->order_) != *expected)
            throw Error("realization of " + name_ + " closed to order " +
                        std::to_string(rf->order_) + ", expected " + expected->str());
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    auto shared = std::shared_ptr<const RealizedFactor>(std::move(rf));
    realization_cache()[name_] = shared;
    return shared;
}

void RealizedFactor::build_from_generators(std::uint64_t element_cap) {
    const auto& gens = descriptor_.perm_generators_;
    const int degree = gens.front().degree();

    std::map<std::uint64_t, std::uint32_t> index;
    elements_.clear();
    elements_.push_back(Permutation::identity(degree));
    index[elements_[0].pack()] = 0;

    // plain closure BFS; discovery order fixes the canonical element index
    for (std::uint32_t at = 0; at < elements_.size(); ++at) {
        Permutation cur = elements_[at];  // copy: elements_ may reallocate
        for (const auto& g : gens) {
            Permutation next = cur * g;
            auto [it, inserted] = index.emplace(next.pack(), elements_.size());
            if (inserted) {
                elements_.push_back(std::move(next));
                if (elements_.size() > element_cap)
                    throw CapExceededError("factor closure above element cap: " + descriptor_.name_,
                                           element_cap);
            }
        }
    }
    order_ = elements_.size();
    bits_ = bits_for(order_);

    pack_sorted_.resize(order_);
    pack_index_.resize(order_);
    std::size_t k = 0;
    for (const auto& [code, idx] : index) {
        pack_sorted_[k] = code;
        pack_index_[k] = idx;
        ++k;
    }

    inv_.resize(order_);
    for (std::uint32_t i = 0; i < order_; ++i) inv_[i] = index_of(elements_[i].inverse());

    if (order_ <= kMultTableMaxOrder) {
        mult_.assign(order_ * order_, 0);
        for (std::uint32_t a = 0; a < order_; ++a)
            for (std::uint32_t b = 0; b < order_; ++b)
                mult_[a * order_ + b] = index_of(elements_[a] * elements_[b]);
    }

    gen_idx_.clear();
    for (const auto& g : gens) gen_idx_.push_back(index_of(g));
}

std::uint32_t RealizedFactor::compose(std::uint32_t a, std::uint32_t b) const {
    if (modulus_) {
        std::uint64_t s = a + b;
        return static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
    }
    if (!mult_.empty()) return mult_[static_cast<std::size_t>(a) * order_ + b];
    return index_of(elements_[a] * elements_[b]);
}

std::uint32_t RealizedFactor::inverse(std::uint32_t a) const {
    if (modulus_) return a == 0 ? 0 : static_cast<std::uint32_t>(modulus_ - a);
    return inv_[a];
}

std::uint32_t RealizedFactor::conjugate(std::uint32_t a, std::uint32_t by) const {
    return compose(compose(by, a), inverse(by));
}

const Permutation& RealizedFactor::permutation(std::uint32_t idx) const {
    if (modulus_) throw Error("cyclic factor has no permutation elements");
    return elements_[idx];
}

std::uint32_t RealizedFactor::index_of(const Permutation& p) const {
    if (modulus_) throw Error("cyclic factor indexes residues, not permutations");
    const std::uint64_t code = p.pack();
    auto it = std::lower_bound(pack_sorted_.begin(), pack_sorted_.end(), code);
    if (it == pack_sorted_.end() || *it != code)
        throw Error("permutation is not an element of " + descriptor_.name_);
    return pack_index_[it - pack_sorted_.begin()];
}

std::uint32_t RealizedFactor::index_of_residue(std::uint64_t r) const {
    if (!modulus_) throw Error("non-cyclic factor indexes permutations, not residues");
    return static_cast<std::uint32_t>(r % modulus_);
}

std::uint64_t RealizedFactor::residue(std::uint32_t idx) const {
    if (!modulus_) throw Error("non-cyclic factor has no residues");
    return idx;
}

std::string RealizedFactor::element_text(std::uint32_t idx) const {
    if (modulus_) return std::to_string(idx);
    return elements_[idx].to_cycles();
}

std::shared_ptr<const RealizedFactor> enumerate_elements(const FactorDescriptor& factor,
                                                         std::uint64_t element_cap) {
    return factor.realize(element_cap);
}

}  // namespace diamforge
