#include "mcgrep/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcg {

namespace {

// floor or ceil of (n << k)/d, k may be negative.
mpz_class shifted_div(const mpz_class& n, const mpz_class& d, long k, bool ceil) {
  mpz_class num = n, den = d, r;
  if (k >= 0) mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
  else mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-k));
  if (ceil) mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

Rational dyadic_round(const Rational& v, unsigned bits, bool ceil) {
  if (v.is_zero()) return Rational(0);
  mpz_class n = v.num(), d = v.den();
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  long k = static_cast<long>(bits) - e;
  mpz_class m = shifted_div(n, d, k, ceil);
  if (k >= 0) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(m, den));
  }
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(-k));
  return Rational(mpq_class(m));
}

}  // namespace

Rational dyadic_floor(const Rational& v, unsigned bits) { return dyadic_round(v, bits, false); }
Rational dyadic_ceil(const Rational& v, unsigned bits) { return dyadic_round(v, bits, true); }

Interval::Interval(const Rational& lo, const Rational& hi, unsigned prec)
    : lo_(lo), hi_(hi), prec_(prec) {
  if (hi_ < lo_) throw std::invalid_argument("interval: lower bound above upper");
}

Interval Interval::raw(Rational lo, Rational hi, unsigned prec) {
  Interval r;
  if (hi < lo) throw std::invalid_argument("interval: lower bound above upper");
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.prec_ = prec;
  return r;
}

namespace {

Interval rounded(const Rational& lo, const Rational& hi, unsigned prec) {
  return Interval::raw(dyadic_floor(lo, prec), dyadic_ceil(hi, prec), prec);
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  unsigned p = std::min(a.precision(), b.precision());
  return rounded(a.lo() + b.lo(), a.hi() + b.hi(), p);
}

Interval operator-(const Interval& a, const Interval& b) {
  unsigned p = std::min(a.precision(), b.precision());
  return rounded(a.lo() - b.hi(), a.hi() - b.lo(), p);
}

Interval operator*(const Interval& a, const Interval& b) {
  unsigned p = std::min(a.precision(), b.precision());
  Rational c1 = a.lo() * b.lo(), c2 = a.lo() * b.hi(),
           c3 = a.hi() * b.lo(), c4 = a.hi() * b.hi();
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return rounded(lo, hi, p);
}

Interval Interval::inv() const {
  if (!excludes(Rational(0)))
    throw std::domain_error("interval: inverse of interval containing zero");
  return rounded(hi_.inv(), lo_.inv(), prec_);
}

Interval Interval::pow(long e) const {
  if (e == 0) return Interval(Rational(1), prec_);
  Interval base = e > 0 ? *this : inv();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-(e + 1)) + 1;
  Interval acc(Rational(1), prec_);
  Interval sq = base;
  while (k) {
    if (k & 1) acc *= sq;
    k >>= 1;
    if (k) sq *= sq;
  }
  return acc;
}

}  // namespace mcg
