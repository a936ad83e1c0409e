#include "loopchar/qpoly.hpp"

#include <sstream>

#include "loopchar/error.hpp"

namespace loopchar {

QPoly QPoly::q_power(long e) {
    require(e >= 0, ErrorCode::InternalError, "q_power wants e >= 0");
    std::vector<mpz_class> c(static_cast<size_t>(e) + 1, mpz_class(0));
    c.back() = 1;
    return QPoly(std::move(c));
}

bool QPoly::is_monomial() const {
    if (coeffs_.empty()) return false;
    for (size_t k = 0; k + 1 < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

long QPoly::low_order() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<long>(k);
    return 0;
}

const mpz_class& QPoly::coeff(long k) const {
    static const mpz_class kZero = 0;
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return QPoly(std::move(c));
}

QPoly QPoly::mul_scalar(const mpz_class& s) const {
    if (s == 0) return QPoly();
    QPoly r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

QPoly QPoly::mul_qpow(long e) const {
    if (is_zero()) return QPoly();
    require(e >= 0, ErrorCode::InternalError, "mul_qpow wants e >= 0");
    std::vector<mpz_class> c(static_cast<size_t>(e), mpz_class(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(c));
}

QPoly QPoly::div_exact(const QPoly& d) const {
    require(!d.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
    if (is_zero()) return QPoly();
    long dd = d.degree();
    long dn = degree();
    require(dn >= dd, ErrorCode::InternalError, "div_exact: degree too small");
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quot(static_cast<size_t>(dn - dd) + 1, mpz_class(0));
    for (long k = dn - dd; k >= 0; --k) {
        mpz_class top = rem[static_cast<size_t>(k + dd)];
        if (top == 0) continue;
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        require(r == 0, ErrorCode::InternalError, "div_exact: inexact leading division");
        quot[static_cast<size_t>(k)] = qc;
        for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= qc * d.coeff(j);
    }
    for (const auto& c : rem)
        require(c == 0, ErrorCode::InternalError, "div_exact: nonzero remainder");
    return QPoly(std::move(quot));
}

QPoly QPoly::pseudo_rem(const QPoly& d) const {
    require(!d.is_zero(), ErrorCode::DivisionByZero, "pseudo_rem by zero");
    long dd = d.degree();
    QPoly r(*this);
    while (!r.is_zero() && r.degree() >= dd) {
        long shift = r.degree() - dd;
        QPoly t = d.mul_scalar(r.leading()).mul_qpow(shift);
        r = r.mul_scalar(d.leading()) - t;
    }
    return r;
}

mpz_class QPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return QPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    QPoly r(*this);
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    // Monomial fast path: gcd of contents times min power of q.
    if (a.is_monomial() && b.is_monomial()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.leading().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.leading().get_mpz_t());
        return QPoly(g).mul_qpow(std::min(a.degree(), b.degree()));
    }
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    // Common power of q.
    long low = std::min(a.low_order(), b.low_order());
    QPoly u = a.primitive_part();
    QPoly v = b.primitive_part();
    if (low > 0) {
        u = u.div_exact(QPoly::q_power(low));
        v = v.div_exact(QPoly::q_power(low));
        // Re-strip any remaining common q power independently.
    }
    long lu = u.low_order(), lv = v.low_order();
    if (lu > 0) u = u.div_exact(QPoly::q_power(lu));
    if (lv > 0) v = v.div_exact(QPoly::q_power(lv));
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        QPoly r = u.pseudo_rem(v).primitive_part();
        u = v;
        v = r;
    }
    QPoly g = u.primitive_part().mul_scalar(cont).mul_qpow(low);
    if (g.leading() < 0) g = -g;
    return g;
}

std::uint64_t QPoly::eval_mod(std::uint64_t x, std::uint64_t p) const {
    // Horner with 128-bit intermediate products.
    unsigned __int128 acc = 0;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = (acc * x) % p;
        std::uint64_t c = mpz_fdiv_ui(coeffs_[k].get_mpz_t(), p);
        acc = (acc + c) % p;
    }
    return static_cast<std::uint64_t>(acc);
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const mpz_class& c = coeff(k);
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace loopchar
