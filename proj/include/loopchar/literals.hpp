#pragma once

#include <string>

#include "loopchar/laurent.hpp"
#include "loopchar/qq.hpp"
#include "loopchar/quad.hpp"
#include "loopchar/shuffle.hpp"

namespace loopchar {

/// Rational-function literal in q: +, -, *, /, ^ with integer constants and
/// the symbol q (e.g. "(q^2-1)/q", "q^-2+1").
Qq parse_qq(const std::string& text);

/// Word literal "e[i,d] e[i',d'] ..." or "f[i,d] ..."; colors are 1-based in
/// the literal and 0-based internally.
Word parse_word(const std::string& text, int rank);

/// Polynomial literal: terms "c * z[i,a]^k * ..." joined by + or -, with c a
/// rational-function literal in q (optional, default 1).
template <class F>
LaurentPoly<typename F::Elem> parse_laurent(const F& fld, const VarLayout& layout,
                                            const std::string& text);

/// Quadratic-field literal "a+b√2" (also accepts "sqrt2" or "rt2" for the
/// radical) with a, b rationals; plain "a" works too.
Quad parse_quad(const std::string& text);

/// Slope-vector literal: comma-separated quad literals, or the sentinels
/// "-inf" / "inf" / "+inf".
SlopeVector parse_slope(const std::string& text, int rank);

// Implementation of the templated polynomial parser lives in literals.cpp via
// explicit helpers; the header-visible part only tokenizes the shape.
namespace detail {
struct PolyTerm {
    std::string coeff;  // Qq literal, may be empty for 1
    bool negated = false;
    std::vector<std::tuple<int, int, int>> powers;  // (color, slot, exponent), 1-based in text
};
std::vector<PolyTerm> parse_poly_shape(const std::string& text);
}  // namespace detail

template <class F>
LaurentPoly<typename F::Elem> parse_laurent(const F& fld, const VarLayout& layout,
                                            const std::string& text) {
    using K = typename F::Elem;
    LaurentPoly<K> out(layout.count());
    for (const auto& term : detail::parse_poly_shape(text)) {
        Qq c = term.coeff.empty() ? Qq::one() : parse_qq(term.coeff);
        if (term.negated) c = -c;
        // Move the exact coefficient into the working field.
        K kc = fld.zero();
        {
            // Evaluate c = num/den through the field's q image.
            K num = fld.zero();
            for (long k = 0; k <= c.num().degree(); ++k) {
                const auto& z = c.num().coeff(k);
                if (z == 0) continue;
                K term_k = fld.from_int(z.get_si()) * fld.q_pow(k);
                num += term_k;
            }
            K den = fld.zero();
            for (long k = 0; k <= c.den().degree(); ++k) {
                const auto& z = c.den().coeff(k);
                if (z == 0) continue;
                den += fld.from_int(z.get_si()) * fld.q_pow(k);
            }
            kc = num / den;
        }
        ExpVec e(static_cast<size_t>(layout.count()), 0);
        for (const auto& [color, slot, exp] : term.powers) {
            require(color >= 1 && color <= layout.rank(), ErrorCode::ParseError,
                    "color out of range in polynomial literal");
            require(slot >= 1 && slot <= layout.ambient()[color - 1], ErrorCode::ParseError,
                    "slot out of range in polynomial literal");
            e[static_cast<size_t>(layout.index(color - 1, slot - 1))] += exp;
        }
        out.add_term(e, kc);
    }
    return out;
}

}  // namespace loopchar
