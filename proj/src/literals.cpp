#include "loopchar/literals.hpp"

#include <cctype>
#include <cstdlib>

namespace loopchar {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        require(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])),
                ErrorCode::ParseError, "expected integer at '" + s.substr(start) + "'");
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::strtol(s.c_str() + start, nullptr, 10);
    }
};

// Recursive-descent expression parser over Q(q).
Qq parse_expr(Cursor& c);

Qq parse_atom(Cursor& c) {
    c.skip_ws();
    if (c.eat('(')) {
        Qq v = parse_expr(c);
        require(c.eat(')'), ErrorCode::ParseError, "missing ')'");
        return v;
    }
    if (c.peek() == 'q') {
        ++c.pos;
        return Qq::q_power(1);
    }
    return Qq(c.integer());
}

Qq parse_power(Cursor& c) {
    Qq base = parse_atom(c);
    if (c.eat('^')) {
        long e = c.integer();
        Qq r = Qq::one();
        Qq b = e >= 0 ? base : base.inv();
        for (long k = 0; k < std::labs(e); ++k) r = r * b;
        return r;
    }
    return base;
}

Qq parse_product(Cursor& c) {
    Qq acc = parse_power(c);
    while (true) {
        if (c.eat('*')) {
            acc = acc * parse_power(c);
        } else if (c.eat('/')) {
            acc = acc / parse_power(c);
        } else {
            // Implicit multiplication: "2q", "3(q+1)".
            char p = c.peek();
            if (p == 'q' || p == '(') {
                acc = acc * parse_power(c);
            } else {
                break;
            }
        }
    }
    return acc;
}

Qq parse_expr(Cursor& c) {
    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    Qq acc = parse_product(c);
    if (neg) acc = -acc;
    while (true) {
        if (c.eat('+'))
            acc = acc + parse_product(c);
        else if (c.eat('-'))
            acc = acc - parse_product(c);
        else
            break;
    }
    return acc;
}

mpq_class parse_rational(const std::string& text) {
    require(!text.empty(), ErrorCode::ParseError, "empty rational literal");
    std::string t = text[0] == '+' ? text.substr(1) : text;  // mpq rejects a leading '+'
    try {
        mpq_class v(t);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
}

}  // namespace

Qq parse_qq(const std::string& text) {
    Cursor c{text};
    Qq v = parse_expr(c);
    require(c.done(), ErrorCode::ParseError, "trailing input in '" + text + "'");
    return v;
}

Word parse_word(const std::string& text, int rank) {
    Word w;
    Cursor c{text};
    bool first = true;
    while (!c.done()) {
        char lead = c.peek();
        require(lead == 'e' || lead == 'f', ErrorCode::ParseError,
                "word letters start with e or f");
        Sign s = lead == 'e' ? Sign::Plus : Sign::Minus;
        if (first) {
            w.sign = s;
            first = false;
        } else {
            require(s == w.sign, ErrorCode::MixedSigns, "mixed e/f letters in one word");
        }
        ++c.pos;
        require(c.eat('['), ErrorCode::ParseError, "expected '[' after letter");
        long color = c.integer();
        require(c.eat(','), ErrorCode::ParseError, "expected ',' in letter");
        long deg = c.integer();
        require(c.eat(']'), ErrorCode::ParseError, "expected ']' after letter");
        require(color >= 1 && color <= rank, ErrorCode::ParseError,
                "color out of range in word literal");
        w.letters.emplace_back(static_cast<int>(color - 1), static_cast<int>(deg));
    }
    require(!w.letters.empty(), ErrorCode::ParseError, "empty word literal");
    return w;
}

namespace detail {

std::vector<PolyTerm> parse_poly_shape(const std::string& text) {
    std::vector<PolyTerm> terms;
    Cursor c{text};
    bool lead_neg = c.eat('-');
    while (true) {
        PolyTerm term;
        term.negated = lead_neg;
        // Factors separated by '*': either z[i,a](^k) or a coefficient chunk.
        std::string coeff;
        bool any = false;
        while (true) {
            c.skip_ws();
            if (c.peek() == 'z') {
                ++c.pos;
                require(c.eat('['), ErrorCode::ParseError, "expected '[' after z");
                long color = c.integer();
                require(c.eat(','), ErrorCode::ParseError, "expected ',' in variable");
                long slot = c.integer();
                require(c.eat(']'), ErrorCode::ParseError, "expected ']' after variable");
                long e = 1;
                if (c.eat('^')) e = c.integer();
                term.powers.emplace_back(static_cast<int>(color), static_cast<int>(slot),
                                         static_cast<int>(e));
                any = true;
            } else {
                // Coefficient chunk: read until '*' or a top-level '+'/'-'
                // that separates terms (not a unary sign or an exponent sign).
                size_t start = c.pos;
                int depth = 0;
                char prev = '\0';
                while (c.pos < c.s.size()) {
                    char ch = c.s[c.pos];
                    if (ch == '(') ++depth;
                    if (ch == ')') --depth;
                    if (depth == 0 && ch == '*') break;
                    if (depth == 0 && (ch == '+' || ch == '-')) {
                        bool unary = prev == '\0' || prev == '^' || prev == '*' || prev == '/' ||
                                     prev == '(' || prev == '+' || prev == '-';
                        if (!unary) break;
                    }
                    if (!std::isspace(static_cast<unsigned char>(ch))) prev = ch;
                    ++c.pos;
                }
                std::string chunk = c.s.substr(start, c.pos - start);
                require(!chunk.empty(), ErrorCode::ParseError,
                        "empty factor in polynomial literal");
                coeff = coeff.empty() ? chunk : "(" + coeff + ")*(" + chunk + ")";
                any = true;
            }
            if (!c.eat('*')) break;
        }
        require(any, ErrorCode::ParseError, "empty term in polynomial literal");
        term.coeff = coeff;
        terms.push_back(std::move(term));
        if (c.done()) break;
        if (c.eat('+'))
            lead_neg = false;
        else if (c.eat('-'))
            lead_neg = true;
        else
            fail(ErrorCode::ParseError, "expected '+' or '-' between terms");
    }
    return terms;
}

}  // namespace detail

Quad parse_quad(const std::string& text) {
    // Find the radical marker, if any.
    static const std::vector<std::string> markers = {"\xE2\x88\x9A""2", "sqrt2", "rt2"};
    size_t mark_pos = std::string::npos, mark_len = 0;
    for (const auto& m : markers) {
        size_t p = text.find(m);
        if (p != std::string::npos && (mark_pos == std::string::npos || p < mark_pos)) {
            mark_pos = p;
            mark_len = m.size();
        }
    }
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (mark_pos == std::string::npos) return Quad(parse_rational(trim(text)));
    std::string before = trim(text.substr(0, mark_pos));
    std::string after = trim(text.substr(mark_pos + mark_len));
    require(after.empty(), ErrorCode::ParseError, "radical must end the quad literal");
    // Split "a+b" / "a-b" at the last top-level sign before the radical.
    std::string a_part, b_part = before;
    if (!before.empty()) {
        size_t split = std::string::npos;
        for (size_t k = before.size(); k-- > 1;) {
            if (before[k] == '+' || before[k] == '-') {
                char prev = before[k - 1];
                if (prev != '/' && prev != '+' && prev != '-') {
                    split = k;
                    break;
                }
            }
        }
        if (split != std::string::npos) {
            a_part = trim(before.substr(0, split));
            b_part = trim(before.substr(split));  // keeps the sign
        }
    }
    mpq_class b;
    if (b_part.empty() || b_part == "+")
        b = 1;
    else if (b_part == "-")
        b = -1;
    else
        b = parse_rational(b_part);
    mpq_class a = a_part.empty() ? mpq_class(0) : parse_rational(a_part);
    return Quad(a, b);
}

SlopeVector parse_slope(const std::string& text, int rank) {
    std::string t = text;
    if (t == "-inf") return SlopeVector::neg_inf();
    if (t == "inf" || t == "+inf") return SlopeVector::pos_inf();
    std::vector<Quad> entries;
    size_t start = 0;
    while (true) {
        size_t comma = t.find(',', start);
        std::string piece = comma == std::string::npos ? t.substr(start)
                                                       : t.substr(start, comma - start);
        entries.push_back(parse_quad(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(entries.size()) == 1 && rank > 1)
        return SlopeVector::constant(rank, entries.front());
    require(static_cast<int>(entries.size()) == rank, ErrorCode::ParseError,
            "slope vector needs " + std::to_string(rank) + " coordinates");
    return SlopeVector(std::move(entries));
}

}  // namespace loopchar
