#pragma once

#include <string>

#include "mcgrep/rational.hpp"

namespace mcg {

inline constexpr unsigned kDefaultPrecision = 128;

// Largest dyadic m/2^k <= v whose significand m has at most `bits` bits.
Rational dyadic_floor(const Rational& v, unsigned bits);
// Smallest such dyadic >= v.
Rational dyadic_ceil(const Rational& v, unsigned bits);

// Closed interval with exact rational endpoints.  Every arithmetic result is
// rounded outward to dyadic rationals of bounded significand, so endpoint
// sizes stay bounded along long products.  Each value carries its own working
// precision (bits of significand); combining two intervals keeps the smaller
// precision.  No global rounding state.
class Interval {
 public:
  Interval() : lo_(0), hi_(0), prec_(kDefaultPrecision) {}
  Interval(int v) : lo_(v), hi_(v), prec_(kDefaultPrecision) {}
  explicit Interval(const Rational& v, unsigned prec = kDefaultPrecision)
      : lo_(v), hi_(v), prec_(prec) {}
  Interval(const Rational& lo, const Rational& hi, unsigned prec);

  // Endpoints taken as given, no rounding.  Bounds order is still checked.
  static Interval raw(Rational lo, Rational hi, unsigned prec);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  unsigned precision() const { return prec_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  // True only when v lies strictly outside.
  bool excludes(const Rational& v) const { return v < lo_ || hi_ < v; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval operator-() const { return raw(-hi_, -lo_, prec_); }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  // Requires 0 strictly outside.
  Interval inv() const;
  Interval pow(long e) const;

  // Identity of representation (endpoints and precision), not equality of the
  // represented reals.  Used by the determinism checks.
  bool operator==(const Interval& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && prec_ == o.prec_;
  }
  bool operator!=(const Interval& o) const { return !(*this == o); }

  std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

 private:
  Rational lo_, hi_;
  unsigned prec_;
};

}  // namespace mcg
