#pragma once

#include <cstdint>
#include <string>

#include "loopchar/error.hpp"
#include "loopchar/qq.hpp"

namespace loopchar {

namespace modarith {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mul(r, b, p);
        b = mul(b, b, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    require(a % p != 0, ErrorCode::DivisionByZero, "inverse of 0 mod p");
    return pow(a, p - 2, p);  // p prime
}

bool is_prime(std::uint64_t n);

}  // namespace modarith

/// Prime-field element; carries its modulus so templated code can use plain
/// operators. A default-constructed element has modulus 0 and acts as a
/// universal zero (generic code spells "zero of K" as K()).
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t prime() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return p_ == 0 ? Fp() : Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        if (p_ == 0) return o;
        if (o.p_ == 0) return *this;
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_);
    }
    Fp operator-(const Fp& o) const {
        if (o.p_ == 0) return *this;
        if (p_ == 0) return -o;
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        if (p_ == 0 || o.p_ == 0) return Fp();
        return Fp(modarith::mul(v_, o.v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp inv() const {
        require(p_ != 0, ErrorCode::DivisionByZero, "inverse of 0 mod p");
        return Fp(modarith::inv(v_, p_), p_);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    std::string to_string() const { return std::to_string(v_); }

  private:
    std::uint64_t v_;
    std::uint64_t p_;
};

/// Evaluation point q = q_value in F_p, modelling "q is not a root of unity"
/// under specialization: construction verifies q_value^k != 1 for all
/// 1 <= k <= order_guard, and that p exceeds both 2^30 and the factorial of
/// the largest symmetrization in play (shuffle prefactors 1/(n! n'!) must be
/// invertible).
class ModEval {
  public:
    ModEval(std::uint64_t prime, std::uint64_t q_value, long order_guard, int max_vars = 12);

    std::uint64_t prime() const { return prime_; }
    std::uint64_t q_value() const { return q_value_; }
    long order_guard() const { return order_guard_; }

    Fp element(std::uint64_t v) const { return Fp(v, prime_); }

  private:
    std::uint64_t prime_;
    std::uint64_t q_value_;
    long order_guard_;
};

/// Residue of a(q_value) mod p; throws BadSpecialization when the reduced
/// denominator vanishes at the point (caller should re-draw q_value).
Fp specialize(const Qq& a, const ModEval& m);

/// Field tag for templated code working over F_p at a fixed q-point.
struct ModField {
    using Elem = Fp;
    explicit ModField(const ModEval& ev) : p(ev.prime()), q(ev.q_value()) {}
    ModField(std::uint64_t p_, std::uint64_t q_) : p(p_), q(q_) {}

    Elem zero() const { return Fp(0, p); }
    Elem one() const { return Fp(1, p); }
    Elem from_int(long v) const {
        std::uint64_t r = v >= 0 ? static_cast<std::uint64_t>(v) % p
                                 : p - (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
        return Fp(r % p, p);
    }
    Elem q_pow(long e) const {
        if (e >= 0) return Fp(modarith::pow(q, static_cast<std::uint64_t>(e), p), p);
        return Fp(modarith::pow(q, static_cast<std::uint64_t>(-e), p), p).inv();
    }
    static constexpr bool exact = false;
    std::string describe() const {
        return "F_" + std::to_string(p) + " at q=" + std::to_string(q);
    }

    std::uint64_t p;
    std::uint64_t q;
};

}  // namespace loopchar
