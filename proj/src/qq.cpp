#include "loopchar/qq.hpp"

#include "loopchar/error.hpp"

namespace loopchar {

namespace {

// Reduce a/b in place to canonical form.
void reduce(QPoly& a, QPoly& b) {
    require(!b.is_zero(), ErrorCode::DivisionByZero, "zero denominator in Q(q)");
    if (a.is_zero()) {
        b = QPoly::one();
        return;
    }
    QPoly g = QPoly::gcd(a, b);
    if (!g.is_one()) {
        a = a.div_exact(g);
        b = b.div_exact(g);
    }
    if (b.leading() < 0) {
        a = -a;
        b = -b;
    }
}

}  // namespace

Qq::Qq(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(num_, den_); }

Qq Qq::q_power(long e) {
    if (e >= 0) return Qq(QPoly::q_power(e), QPoly::one());
    return Qq(QPoly::one(), QPoly::q_power(-e));
}

Qq Qq::operator-() const {
    Qq r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Qq Qq::operator+(const Qq& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return Qq(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Qq Qq::operator-(const Qq& o) const {
    if (o.is_zero()) return *this;
    return Qq(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Qq Qq::operator*(const Qq& o) const {
    if (is_zero() || o.is_zero()) return Qq();
    // Cross-reduce before multiplying to limit intermediate growth.
    QPoly g1 = QPoly::gcd(num_, o.den_);
    QPoly g2 = QPoly::gcd(o.num_, den_);
    QPoly n1 = g1.is_one() ? num_ : num_.div_exact(g1);
    QPoly d2 = g1.is_one() ? o.den_ : o.den_.div_exact(g1);
    QPoly n2 = g2.is_one() ? o.num_ : o.num_.div_exact(g2);
    QPoly d1 = g2.is_one() ? den_ : den_.div_exact(g2);
    Qq r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Qq Qq::operator/(const Qq& o) const {
    require(!o.is_zero(), ErrorCode::DivisionByZero, "division by zero in Q(q)");
    return *this * o.inv();
}

Qq Qq::inv() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero in Q(q)");
    Qq r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

std::string Qq::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool n_atom = num_.is_monomial() && (num_.leading() == 1 || num_.leading() == -1);
    bool d_atom = den_.is_monomial() && den_.leading() == 1;
    std::string lhs = n_atom ? n : "(" + n + ")";
    std::string rhs = d_atom ? d : "(" + d + ")";
    return lhs + "/" + rhs;
}

}  // namespace loopchar
