#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace loopchar {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Coefficient k is the coefficient of q^k; the vector carries
/// no trailing zeros, and the zero polynomial is the empty vector.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const mpz_class& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit QPoly(long c) : QPoly(mpz_class(c)) {}
    explicit QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(1); }
    /// q^e for e >= 0.
    static QPoly q_power(long e);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monomial() const;
    long degree() const { return coeffs_.empty() ? -1 : static_cast<long>(coeffs_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    long low_order() const;
    const mpz_class& coeff(long k) const;
    const mpz_class& leading() const { return coeffs_.back(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }
    bool operator<(const QPoly& o) const { return coeffs_ < o.coeffs_; }

    QPoly mul_scalar(const mpz_class& c) const;
    QPoly mul_qpow(long e) const;  // multiply by q^e, e >= 0

    /// Exact division; throws InternalError if the division leaves a remainder.
    QPoly div_exact(const QPoly& d) const;
    /// Euclidean division over Q is avoided: pseudo-remainder rem(lc(d)^k * this, d).
    QPoly pseudo_rem(const QPoly& d) const;

    /// gcd of all coefficients (positive; 0 for the zero polynomial).
    mpz_class content() const;
    /// this / content, sign-normalized so the leading coefficient is positive.
    QPoly primitive_part() const;

    /// Primitive polynomial gcd over Z[q] (primitive PRS); result is primitive
    /// with positive leading coefficient. gcd(0, b) = primitive(b).
    static QPoly gcd(const QPoly& a, const QPoly& b);

    /// Evaluate at q = x modulo p (p < 2^63).
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;

    std::string to_string(const std::string& var = "q") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<mpz_class> coeffs_;
};

}  // namespace loopchar
