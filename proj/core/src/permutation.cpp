#include "diamforge/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "diamforge/errors.hpp"

namespace diamforge {

Permutation Permutation::identity(int degree) {
    std::vector<std::uint8_t> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    if (img_.empty()) throw Error("permutation degree must be >= 1");
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t v : img_) {
        if (v >= img_.size() || seen[v]) throw Error("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
    if (degree < 1 || degree > 255) throw Error("unsupported permutation degree");
    std::vector<std::uint8_t> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty permutation", pos);
    if (text[pos] == 'e') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw ParseError("trailing input after identity", pos);
        return Permutation(std::move(img));
    }
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos);
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected point or ')'", pos);
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            if (value < 1 || value > degree) throw ParseError("point out of range", pos);
            if (used[value - 1]) throw ParseError("point appears twice", pos);
            used[value - 1] = true;
            cycle.push_back(value - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;  // commas optional
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw Error("degree mismatch in permutation product");
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = img_[rhs.img_[x]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[img_[x]] = static_cast<std::uint8_t>(x);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

bool Permutation::is_even() const {
    std::vector<bool> seen(img_.size(), false);
    int transpositions = 0;
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        std::size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = img_[y];
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::uint64_t Permutation::pack() const {
    if (img_.size() > 16) throw Error("pack() requires degree <= 16");
    std::uint64_t code = 0;
    for (std::size_t x = 0; x < img_.size(); ++x)
        code |= static_cast<std::uint64_t>(img_[x]) << (4 * x);
    return code;
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x] || img_[x] == x) {
            seen[x] = true;
            continue;
        }
        out += '(';
        std::size_t y = x;
        bool first = true;
        while (!seen[y]) {
            seen[y] = true;
            if (!first) out += ' ';
            out += std::to_string(y + 1);
            first = false;
            y = img_[y];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a * b * a.inverse() * b.inverse();
}

}  // namespace diamforge
