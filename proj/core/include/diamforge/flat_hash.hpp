#pragma once

#include <cstdint>
#include <vector>

#include "diamforge/errors.hpp"

namespace diamforge {

// Insert-only open-addressing map from 64-bit encodings to dense ids.
// Encodings are < 2^63, so ~0 serves as the empty slot marker. This is the
// hot structure behind every implicit-graph walk here; std::unordered_map
// is too slow and too fat for multi-million state fronts.
class FlatU64Map {
public:
    explicit FlatU64Map(std::uint64_t expected = 64) { rehash_for(expected); }

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return x;
    }

    // returns the id of key, inserting it with `next_id` if absent;
    // `inserted` reports which happened
    std::uint32_t find_or_insert(std::uint64_t key, std::uint32_t next_id, bool& inserted) {
        if ((size_ + 1) * 4 > capacity_ * 3) grow();
        std::uint64_t at = mix(key) & mask_;
        for (;;) {
            if (keys_[at] == kEmpty) {
                keys_[at] = key;
                vals_[at] = next_id;
                ++size_;
                inserted = true;
                return next_id;
            }
            if (keys_[at] == key) {
                inserted = false;
                return vals_[at];
            }
            at = (at + 1) & mask_;
        }
    }

    // lookup without insertion; returns false if absent
    bool find(std::uint64_t key, std::uint32_t& value) const {
        std::uint64_t at = mix(key) & mask_;
        for (;;) {
            if (keys_[at] == kEmpty) return false;
            if (keys_[at] == key) {
                value = vals_[at];
                return true;
            }
            at = (at + 1) & mask_;
        }
    }

    bool contains(std::uint64_t key) const {
        std::uint32_t v;
        return find(key, v);
    }

    std::uint64_t size() const { return size_; }

    void reserve(std::uint64_t expected) {
        if (expected * 4 > capacity_ * 3) rehash_for(expected);
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    void rehash_for(std::uint64_t expected) {
        std::uint64_t cap = 16;
        while (cap * 3 < expected * 4) cap <<= 1;
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<std::uint32_t> old_vals = std::move(vals_);
        keys_.assign(cap, kEmpty);
        vals_.assign(cap, 0);
        capacity_ = cap;
        mask_ = cap - 1;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == kEmpty) continue;
            std::uint64_t at = mix(old_keys[i]) & mask_;
            while (keys_[at] != kEmpty) at = (at + 1) & mask_;
            keys_[at] = old_keys[i];
            vals_[at] = old_vals[i];
        }
    }

    void grow() { rehash_for(size_ * 2 + 16); }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> vals_;
    std::uint64_t capacity_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t size_ = 0;
};

}  // namespace diamforge
