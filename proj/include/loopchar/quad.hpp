#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "loopchar/cartan.hpp"

namespace loopchar {

/// Exact element a + b*sqrt(2) of the ordered field Q(sqrt(2)). Slope vectors
/// live here so that genericity (irrational coordinate ratios) is realizable
/// while every comparison against an integer threshold stays exact.
class Quad {
  public:
    Quad() : a_(0), b_(0) {}
    Quad(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    explicit Quad(long v) : a_(v), b_(0) {}
    explicit Quad(const mpq_class& a) : a_(a), b_(0) { a_.canonicalize(); }

    static Quad sqrt2() { return Quad(mpq_class(0), mpq_class(1)); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt2_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Quad operator-() const { return Quad(-a_, -b_); }
    Quad operator+(const Quad& o) const { return Quad(a_ + o.a_, b_ + o.b_); }
    Quad operator-(const Quad& o) const { return Quad(a_ - o.a_, b_ - o.b_); }
    Quad operator*(const Quad& o) const {
        return Quad(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    Quad operator*(long k) const { return Quad(a_ * k, b_ * k); }
    Quad& operator+=(const Quad& o) { return *this = *this + o; }

    int sign() const;
    bool operator<(const Quad& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Quad& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Quad& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Quad& o) const { return (*this - o).sign() >= 0; }
    bool operator==(const Quad& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Quad& o) const { return !(*this == o); }

    /// Largest integer <= *this, exact.
    long floor() const;
    /// Smallest integer >= *this, exact.
    long ceil() const;
    /// Smallest integer strictly greater than *this.
    long strict_above() const { return is_integer() ? floor() + 1 : ceil(); }
    /// Largest integer strictly less than *this.
    long strict_below() const { return is_integer() ? floor() - 1 : floor(); }

    std::string to_string() const;

  private:
    mpq_class a_;
    mpq_class b_;
};

/// Slope vector p in R^I with first-class -inf/+inf sentinels, so band
/// constructions need no special path at open ends.
class SlopeVector {
  public:
    enum class Kind { NegInf, Finite, PosInf };

    SlopeVector() : kind_(Kind::Finite) {}
    explicit SlopeVector(std::vector<Quad> entries)
        : kind_(Kind::Finite), entries_(std::move(entries)) {}
    static SlopeVector neg_inf() { return SlopeVector(Kind::NegInf); }
    static SlopeVector pos_inf() { return SlopeVector(Kind::PosInf); }
    static SlopeVector constant(int rank, const Quad& v) {
        return SlopeVector(std::vector<Quad>(static_cast<size_t>(rank), v));
    }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const std::vector<Quad>& entries() const { return entries_; }
    const Quad& operator[](size_t i) const { return entries_[i]; }
    int rank() const { return static_cast<int>(entries_.size()); }

    Quad dot(const DegreeVector& m) const {
        require(finite(), ErrorCode::InternalError, "dot with infinite slope");
        Quad s;
        for (size_t i = 0; i < entries_.size(); ++i) s += entries_[i] * m[i];
        return s;
    }

    /// Strict componentwise order, treating sentinels as everywhere smaller
    /// or larger than any finite vector.
    static bool less(const SlopeVector& p1, const SlopeVector& p2);

    std::string to_string() const;

  private:
    explicit SlopeVector(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<Quad> entries_;
};

/// Verdict of the bounded genericity test: |n| <= bound windowed check of
/// whether {n : p.n integral} is 0 or a single line Z m.
struct GenericityVerdict {
    bool generic = false;
    DegreeVector generator;                                  // primitive m, or all-zero
    std::optional<std::pair<DegreeVector, DegreeVector>> witness;  // non-collinear pair
    DegreeVector bound;
};

/// Windowed genericity test over |n_i| <= bound_i. The verdict only speaks
/// for the window; full genericity is a statement over all of Z^I.
GenericityVerdict is_generic(const SlopeVector& p, const DegreeVector& bound);

}  // namespace loopchar
