#pragma once

// Arbitrary-precision rational scalar backed by GMP. Values are kept
// canonical at all times: gcd(num, den) = 1 and den > 0. The wrapper
// deliberately returns plain values from every operator so that no
// expression-template type ever reaches Eigen.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcg {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "p", "-p", "p/q" with optional sign on p. Den must be nonzero.
  static Rational from_string(std::string_view s);

  std::string str() const { return v_.get_str(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inv() const {
    if (is_zero()) throw std::domain_error("rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  // e may be negative for nonzero values.
  Rational pow(long e) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  std::string buf(s);
  auto slash = buf.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(buf);
      return Rational(mpq_class(n));
    }
    mpz_class n(buf.substr(0, slash));
    mpz_class d(buf.substr(slash + 1));
    if (d == 0) throw std::domain_error("rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: malformed literal '" + buf + "'");
  }
}

inline Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : inv();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-(e + 1)) + 1;
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  return Rational(mpq_class(n, d));
}

// True and sets *out iff v has an exact rational n-th root (v >= 0, n >= 1).
inline bool nth_root_exact(const Rational& v, unsigned long n, Rational* out) {
  if (n == 0) throw std::domain_error("rational: 0th root");
  if (v.sign() < 0) return false;
  mpz_class rn, rd;
  int num_exact = mpz_root(rn.get_mpz_t(), v.num().get_mpz_t(), n);
  if (!num_exact) return false;
  int den_exact = mpz_root(rd.get_mpz_t(), v.den().get_mpz_t(), n);
  if (!den_exact) return false;
  if (out) *out = Rational(mpq_class(rn, rd));
  return true;
}

}  // namespace mcg
