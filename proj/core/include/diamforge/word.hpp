#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diamforge {

// One letter of a word: a generator index into the owning GeneratingSet,
// possibly inverted. Identity letters are never stored, so size() is the
// certified length.
struct Letter {
    std::uint32_t gen = 0;
    bool inv = false;

    bool operator==(const Letter& rhs) const { return gen == rhs.gen && inv == rhs.inv; }
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    void push_back(Letter l) { letters_.push_back(l); }
    void append(const Word& w) {
        letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    }

    Word operator+(const Word& rhs) const {
        Word out = *this;
        out.append(rhs);
        return out;
    }

    Word inverted() const {
        Word out;
        out.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            out.letters_.push_back(Letter{it->gen, !it->inv});
        return out;
    }

    // text form: "g3.g1'.g2" with apostrophe marking an inverse; "e" if empty
    std::string to_text() const {
        if (letters_.empty()) return "e";
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += '.';
            out += 'g';
            out += std::to_string(letters_[i].gen);
            if (letters_[i].inv) out += '\'';
        }
        return out;
    }

    bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }

private:
    std::vector<Letter> letters_;
};

// shortlex: length first, then (gen, inv) lexicographically
inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i].gen != lb[i].gen) return la[i].gen < lb[i].gen;
        if (la[i].inv != lb[i].inv) return !la[i].inv;
    }
    return false;
}

}  // namespace diamforge
