#include "loopchar/quad.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace loopchar {

int Quad::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 to 2 b^2; the side with the larger square wins.
    mpq_class a2 = a_ * a_;
    mpq_class b2 = 2 * b_ * b_;
    int c = cmp(a2, b2);
    if (c == 0) return 0;  // only reachable when a = b = 0, kept for safety
    return c > 0 ? sa : sb;
}

long Quad::floor() const {
    // Double estimate, then certify with exact comparisons.
    double approx = a_.get_d() + b_.get_d() * std::sqrt(2.0);
    long f = static_cast<long>(std::floor(approx));
    while ((*this - Quad(f)).sign() < 0) --f;          // f <= x
    while ((*this - Quad(f + 1)).sign() >= 0) ++f;     // x < f + 1
    return f;
}

long Quad::ceil() const {
    long f = floor();
    return (*this == Quad(f)) ? f : f + 1;
}

std::string Quad::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::ostringstream os;
    bool lead = false;
    if (a_ != 0) {
        os << a_.get_str();
        lead = true;
    }
    if (b_ > 0 && lead) os << "+";
    if (b_ == -1)
        os << "-";
    else if (b_ != 1)
        os << b_.get_str();
    os << "\xE2\x88\x9A" "2";  // UTF-8 square-root sign
    return os.str();
}

bool SlopeVector::less(const SlopeVector& p1, const SlopeVector& p2) {
    if (p1.kind_ == Kind::NegInf) return p2.kind_ != Kind::NegInf;
    if (p1.kind_ == Kind::PosInf) return false;
    if (p2.kind_ == Kind::PosInf) return true;
    if (p2.kind_ == Kind::NegInf) return false;
    require(p1.rank() == p2.rank(), ErrorCode::InternalError, "slope rank mismatch");
    for (int i = 0; i < p1.rank(); ++i)
        if (!(p1[static_cast<size_t>(i)] < p2[static_cast<size_t>(i)])) return false;
    return true;
}

std::string SlopeVector::to_string() const {
    if (kind_ == Kind::NegInf) return "-inf";
    if (kind_ == Kind::PosInf) return "+inf";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i].to_string();
    }
    os << ")";
    return os.str();
}

namespace {

DegreeVector primitive(const DegreeVector& v) {
    int g = 0;
    for (int x : v) g = std::gcd(g, std::abs(x));
    if (g <= 1) return v;
    DegreeVector r(v);
    for (auto& x : r) x /= g;
    return r;
}

bool collinear(const DegreeVector& a, const DegreeVector& b) {
    // a, b nonzero: collinear iff a_i b_j = a_j b_i for all i < j.
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (static_cast<long>(a[i]) * b[j] != static_cast<long>(a[j]) * b[i]) return false;
    return true;
}

}  // namespace

GenericityVerdict is_generic(const SlopeVector& p, const DegreeVector& bound) {
    require(p.finite(), ErrorCode::InternalError, "is_generic wants a finite slope vector");
    GenericityVerdict v;
    v.bound = bound;
    size_t rank = bound.size();
    std::vector<DegreeVector> hits;
    DegreeVector cur(rank, 0);
    for (size_t i = 0; i < rank; ++i) cur[i] = -bound[i];
    while (true) {
        if (!is_zero(cur)) {
            Quad s = p.dot(cur);
            if (s.is_integer()) hits.push_back(cur);
        }
        size_t k = rank;
        bool done = true;
        while (k > 0) {
            --k;
            if (cur[k] < bound[k]) {
                ++cur[k];
                for (size_t j = k + 1; j < rank; ++j) cur[j] = -bound[j];
                done = false;
                break;
            }
        }
        if (done) break;
    }
    if (hits.empty()) {
        v.generic = true;
        v.generator = DegreeVector(rank, 0);
        return v;
    }
    DegreeVector dir = primitive(hits.front());
    for (const auto& h : hits) {
        if (!collinear(dir, h)) {
            v.generic = false;
            v.witness = std::make_pair(hits.front(), h);
            return v;
        }
    }
    // All hits on one line. The hit set is a subgroup of Z^I, so along the
    // line it is g Z for g = gcd of the multipliers relative to dir.
    long g = 0;
    size_t lead = 0;
    while (dir[lead] == 0) ++lead;
    for (const auto& h : hits) g = std::gcd(g, std::abs(static_cast<long>(h[lead]) / dir[lead]));
    DegreeVector gen = dir;
    for (auto& x : gen) x = static_cast<int>(x * g);
    for (int x : gen) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : gen) y = -y;
            break;
        }
    }
    v.generic = true;
    v.generator = gen;
    return v;
}

}  // namespace loopchar
