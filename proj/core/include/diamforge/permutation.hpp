#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diamforge {

// Permutation of {1..m}, stored 0-based. The composition convention is
// (a*b)(x) = a(b(x)) everywhere in this library: b acts first.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int degree);

    // images[i] = image of point i (0-based); must be a bijection
    explicit Permutation(std::vector<std::uint8_t> images);

    // cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "e" or "()"
    // denote the identity. Degree is the given one; points must not exceed it.
    static Permutation from_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    std::uint8_t operator()(std::uint8_t point) const { return img_[point]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    Permutation operator*(const Permutation& rhs) const;  // this(rhs(x))
    Permutation inverse() const;

    bool is_identity() const;
    bool is_even() const;  // parity as a product of transpositions

    // packs images 4 bits per point; requires degree <= 16
    std::uint64_t pack() const;

    std::string to_cycles() const;  // 1-based cycle notation, "e" for identity

    bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
    bool operator!=(const Permutation& rhs) const { return img_ != rhs.img_; }
    bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

private:
    std::vector<std::uint8_t> img_;
};

Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace diamforge
