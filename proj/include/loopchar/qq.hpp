#pragma once

#include <gmpxx.h>

#include <string>

#include "loopchar/qpoly.hpp"

namespace loopchar {

/// Element of Q(q): a reduced ratio of integer polynomials in q.
///
/// Canonical form: gcd(num, den) = 1 over Z[q] (polynomial factors and
/// integer content alike) and den has a positive leading coefficient, so
/// equality is plain structural comparison.
class Qq {
  public:
    Qq() : num_(), den_(QPoly::one()) {}
    Qq(QPoly num, QPoly den);
    explicit Qq(long v) : num_(QPoly(v)), den_(QPoly::one()) {}
    explicit Qq(const mpz_class& v) : num_(QPoly(v)), den_(QPoly::one()) {}
    explicit Qq(const mpq_class& v) : num_(QPoly(v.get_num())), den_(QPoly(v.get_den())) {}

    static Qq zero() { return Qq(); }
    static Qq one() { return Qq(1); }
    /// q^e for any integer e (negative exponents go to the denominator).
    static Qq q_power(long e);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Qq operator-() const;
    Qq operator+(const Qq& o) const;
    Qq operator-(const Qq& o) const;
    Qq operator*(const Qq& o) const;
    Qq operator/(const Qq& o) const;
    Qq& operator+=(const Qq& o) { return *this = *this + o; }
    Qq& operator-=(const Qq& o) { return *this = *this - o; }
    Qq& operator*=(const Qq& o) { return *this = *this * o; }
    Qq& operator/=(const Qq& o) { return *this = *this / o; }
    Qq inv() const;

    bool operator==(const Qq& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Qq& o) const { return !(*this == o); }
    bool operator<(const Qq& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string to_string() const;

  private:
    QPoly num_;
    QPoly den_;
};

/// Field tag for templated code working over Q(q).
struct QqField {
    using Elem = Qq;
    Elem zero() const { return Qq::zero(); }
    Elem one() const { return Qq::one(); }
    Elem from_int(long v) const { return Qq(v); }
    Elem q_pow(long e) const { return Qq::q_power(e); }
    static constexpr bool exact = true;
    std::string describe() const { return "Q(q)"; }
};

}  // namespace loopchar
