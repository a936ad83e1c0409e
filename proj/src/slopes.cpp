#include "loopchar/slopes.hpp"

#include <algorithm>

namespace loopchar {

std::vector<DegreeVector> scaling_patterns(const DegreeVector& n) {
    std::vector<DegreeVector> out;
    DegreeVector m(n.size(), 0);
    while (true) {
        size_t k = n.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (m[k] < n[k]) {
                ++m[k];
                std::fill(m.begin() + static_cast<long>(k) + 1, m.end(), 0);
                done = false;
                break;
            }
        }
        if (done) break;
        out.push_back(m);
    }
    return out;
}

std::vector<PrefixConstraint> slope_constraints(const DegreeVector& n, Sign sign,
                                                const SlopeVector& p, SlopeKind kind) {
    std::vector<PrefixConstraint> out;
    bool strict = (kind == SlopeKind::Gt || kind == SlopeKind::Lt);
    bool at_zero;  // xi -> 0 (min side) or xi -> infinity (max side)
    if (sign == Sign::Plus)
        at_zero = (kind == SlopeKind::Geq || kind == SlopeKind::Gt);
    else
        at_zero = (kind == SlopeKind::Leq || kind == SlopeKind::Lt);
    if (p.kind() == SlopeVector::Kind::NegInf) {
        require(kind == SlopeKind::Geq || kind == SlopeKind::Gt, ErrorCode::InternalError,
                "slope <= -inf is empty");
        return out;  // every element has slope > -inf
    }
    if (p.kind() == SlopeVector::Kind::PosInf) {
        require(kind == SlopeKind::Leq || kind == SlopeKind::Lt, ErrorCode::InternalError,
                "slope >= +inf is empty");
        return out;
    }
    int s = sign == Sign::Plus ? 1 : -1;
    for (const auto& m : scaling_patterns(n)) {
        Quad pm = p.dot(m) * s;
        PrefixConstraint con;
        con.m = m;
        if (at_zero) {
            Quad threshold = pm + Quad(bothscaled(m));
            con.kind = PrefixConstraint::Kind::MinAtLeast;
            con.bound = strict ? threshold.strict_above() : threshold.ceil();
        } else {
            Quad threshold = pm + Quad(touched(n, m));
            con.kind = PrefixConstraint::Kind::MaxAtMost;
            con.bound = strict ? threshold.strict_below() : threshold.floor();
        }
        out.push_back(std::move(con));
    }
    return out;
}

namespace detail {

namespace {

bool total_abs_one(const DegreeVector& m) { return total(m) == 1; }

}  // namespace

std::vector<int> derive_lower_bounds(const DegreeVector& n, long total,
                                     const std::vector<PrefixConstraint>& cs) {
    size_t rank = n.size();
    std::vector<std::optional<long>> lower(rank), upper(rank);
    for (const auto& con : cs) {
        // Unit patterns bound a single extreme exponent of one color.
        if (total_abs_one(con.m)) {
            size_t i = 0;
            while (con.m[i] == 0) ++i;
            if (con.kind == PrefixConstraint::Kind::MinAtLeast) {
                if (!lower[i] || *lower[i] < con.bound) lower[i] = con.bound;
            } else {
                if (!upper[i] || *upper[i] > con.bound) upper[i] = con.bound;
            }
        }
    }
    std::vector<int> out(rank, 0);
    for (size_t i = 0; i < rank; ++i) {
        if (n[i] == 0) continue;
        if (lower[i]) {
            out[i] = static_cast<int>(*lower[i]);
            continue;
        }
        // No direct lower bound: recover one from the fixed total and the
        // other variables' upper bounds.
        long others = 0;
        bool ok = true;
        for (size_t j = 0; j < rank; ++j) {
            long count = (j == i) ? n[j] - 1 : n[j];
            if (count == 0) continue;
            if (!upper[j]) {
                ok = false;
                break;
            }
            others += *upper[j] * count;
        }
        require(ok, ErrorCode::InfinitePolytope,
                "no finite lower bound for color " + std::to_string(i + 1));
        out[i] = static_cast<int>(total - others);
    }
    return out;
}

void require_finite_type(const CartanData& c) {
    if (!c.finite_type_tag().has_value()) positive_roots(c);  // throws NotFiniteType
}

}  // namespace detail

std::vector<Word> enumerate_words(const CartanData& c, Sign sign, const DegreeVector& n,
                                  long degree_sum, const std::vector<int>& letter_floor) {
    std::vector<Word> out;
    // Orderings of n = distinct permutations of the color multiset.
    std::vector<int> colors;
    for (int i = 0; i < c.rank(); ++i)
        for (int k = 0; k < n[static_cast<size_t>(i)]; ++k) colors.push_back(i);
    if (colors.empty()) return out;
    std::sort(colors.begin(), colors.end());
    do {
        size_t len = colors.size();
        // Letter degrees d_a >= floor(color_a) with fixed sum.
        std::vector<int> floors(len);
        long min_sum = 0;
        for (size_t a = 0; a < len; ++a) {
            floors[a] = letter_floor[static_cast<size_t>(colors[a])];
            min_sum += floors[a];
        }
        long slack = degree_sum - min_sum;
        if (slack < 0) continue;
        std::vector<long> extra(len, 0);
        extra[0] = slack;
        // Enumerate compositions of slack into len nonnegative parts.
        while (true) {
            Word w;
            w.sign = sign;
            for (size_t a = 0; a < len; ++a)
                w.letters.emplace_back(colors[a], static_cast<int>(floors[a] + extra[a]));
            out.push_back(std::move(w));
            // Next composition in colex-style order.
            if (len == 1) break;
            size_t k = 0;
            while (k + 1 < len && extra[k] == 0) ++k;
            if (k + 1 == len) break;
            long v = extra[k];
            extra[k] = 0;
            extra[0] = v - 1;
            ++extra[k + 1];
        }
    } while (std::next_permutation(colors.begin(), colors.end()));
    return out;
}

std::string Word::to_string() const {
    std::string s;
    for (size_t a = 0; a < letters.size(); ++a) {
        if (a) s += " ";
        s += (sign == Sign::Plus ? "e[" : "f[") + std::to_string(letters[a].first + 1) + "," +
             std::to_string(letters[a].second) + "]";
    }
    return s.empty() ? (sign == Sign::Plus ? "e[]" : "f[]") : s;
}

}  // namespace loopchar
