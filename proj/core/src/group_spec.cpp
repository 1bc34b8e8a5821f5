#include "diamforge/group_spec.hpp"

#include <cctype>

#include "diamforge/errors.hpp"

namespace diamforge {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::uint64_t eat_number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a number", pos);
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > 100'000'000'000ULL) throw ParseError("number too large", pos);
            ++pos;
        }
        return v;
    }
};

void append_factor(Cursor& cur, std::vector<FactorDescriptor>& out) {
    const std::size_t at = (cur.skip_ws(), cur.pos);
    try {
        if (cur.eat_word("alt:")) {
            out.push_back(FactorDescriptor::alternating(static_cast<int>(cur.eat_number())));
        } else if (cur.eat_word("psl:")) {
            const std::uint64_t two = cur.eat_number();
            if (two != 2 || !cur.eat(','))
                throw ParseError("only psl:2,q is supported", cur.pos);
            out.push_back(FactorDescriptor::psl2(static_cast<int>(cur.eat_number())));
        } else if (cur.eat_word("cyclic:")) {
            const std::uint64_t p = cur.eat_number();
            std::uint64_t e = 1;
            if (cur.eat('^')) e = cur.eat_number();
            if (e < 1 || e > 64) throw ParseError("cyclic exponent out of range", cur.pos);
            for (std::uint64_t k = 0; k < e; ++k) out.push_back(FactorDescriptor::cyclic(p));
        } else if (cur.eat_word("m11")) {
            out.push_back(FactorDescriptor::m11());
        } else {
            throw ParseError("expected a factor (alt:m, psl:2,q, cyclic:p[^e], m11)", at);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), at);
    }
}

}  // namespace

ProductGroup parse_group_spec(const std::string& text, std::uint64_t element_cap) {
    Cursor cur{text};
    std::vector<FactorDescriptor> factors;
    append_factor(cur, factors);
    while (!cur.done()) {
        if (!cur.eat('x')) throw ParseError("expected 'x' between factors", cur.pos);
        append_factor(cur, factors);
    }
    return ProductGroup(std::move(factors), element_cap);
}

std::string format_group_spec(const ProductGroup& group) {
    std::string out;
    for (int i = 0; i < group.arity(); ++i) {
        if (i) out += " x ";
        const FactorDescriptor& f = group.factor(i);
        switch (f.family()) {
            case Family::Alternating:
                out += "alt:" + std::to_string(f.alt_degree());
                break;
            case Family::LieType: {
                const std::string& name = f.name();  // "PSL(2,q)"
                out += "psl:2," + name.substr(6, name.size() - 7);
                break;
            }
            case Family::Sporadic:
                out += "m11";
                break;
            case Family::Cyclic:
                out += "cyclic:" + std::to_string(f.cyclic_prime());
                break;
        }
    }
    return out;
}

ProductElement parse_element(const std::string& text, const ProductGroup& group) {
    // split on top-level ';'
    std::vector<std::string> items;
    std::string current;
    for (char c : text) {
        if (c == ';') {
            items.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    items.push_back(current);

    std::vector<std::uint32_t> comp(group.arity());
    int factor_at = 0;
    for (const std::string& item : items) {
        if (factor_at >= group.arity())
            throw ParseError("more components than factors", text.size());
        const RealizedFactor& f = group.realized(factor_at);
        if (!f.is_cyclic()) {
            const int degree = f.permutation(0).degree();
            comp[factor_at] = f.index_of(Permutation::from_cycles(item, degree));
            ++factor_at;
            continue;
        }
        // residue tuple covering consecutive cyclic factors, or a bare residue
        std::vector<std::uint64_t> values;
        Cursor cur{item};
        if (cur.peek() == '(') {
            cur.eat('(');
            values.push_back(cur.eat_number());
            while (cur.eat(',')) values.push_back(cur.eat_number());
            if (!cur.eat(')')) throw ParseError("expected ')'", cur.pos);
            if (!cur.done()) throw ParseError("trailing input after tuple", cur.pos);
        } else {
            values.push_back(cur.eat_number());
            if (!cur.done()) throw ParseError("trailing input after residue", cur.pos);
        }
        for (std::uint64_t v : values) {
            if (factor_at >= group.arity())
                throw ParseError("more residues than factors", text.size());
            const RealizedFactor& cf = group.realized(factor_at);
            if (!cf.is_cyclic())
                throw ParseError("residue given for non-cyclic factor " +
                                     std::to_string(factor_at + 1),
                                 0);
            comp[factor_at] = cf.index_of_residue(v);
            ++factor_at;
        }
    }
    if (factor_at != group.arity())
        throw ParseError("element fills " + std::to_string(factor_at) + " of " +
                             std::to_string(group.arity()) + " factors",
                         text.size());
    return group.make(std::move(comp));
}

std::vector<ProductElement> parse_elements(const std::vector<std::string>& texts,
                                           const ProductGroup& group) {
    std::vector<ProductElement> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_element(t, group));
    return out;
}

std::string format_element(const ProductElement& g) {
    const ProductGroup& group = g.group();
    std::string out;
    bool first = true;
    for (int i = 0; i < group.arity();) {
        if (!first) out += "; ";
        first = false;
        if (!group.realized(i).is_cyclic()) {
            out += group.realized(i).element_text(g.component_index(i));
            ++i;
            continue;
        }
        std::string tuple = "(";
        bool inner_first = true;
        while (i < group.arity() && group.realized(i).is_cyclic()) {
            if (!inner_first) tuple += ",";
            inner_first = false;
            tuple += std::to_string(g.component_index(i));
            ++i;
        }
        out += tuple + ")";
    }
    return out;
}

}  // namespace diamforge
