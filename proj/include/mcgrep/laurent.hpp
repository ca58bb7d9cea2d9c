#pragma once

// Two-variable Laurent polynomials over Rational, exponents in q and t.
// Canonical form: sorted term map with no zero coefficients, so equality
// is container equality. The zero polynomial is the empty map.

#include <map>
#include <string>
#include <utility>

#include "mcgrep/rational.hpp"

namespace mcg {

struct Monomial {
  int q = 0;
  int t = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(int c) { if (c != 0) terms_[{0, 0}] = Rational(c); }
  LaurentPoly(long c) { if (c != 0) terms_[{0, 0}] = Rational(c); }
  explicit LaurentPoly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

  static LaurentPoly monomial(int qexp, int texp, const Rational& coeff = Rational(1)) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_[{qexp, texp}] = coeff;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} && terms_.begin()->second.is_one();
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }
  Rational constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  std::size_t term_count() const { return terms_.size(); }

  // All coefficients integral, i.e. the polynomial lies in Z[q^+-1, t^+-1].
  bool has_integer_coeffs() const;

  // Exact evaluation at q = q0, t = t0; both must be nonzero.
  Rational specialize(const Rational& q0, const Rational& t0) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline LaurentPoly laurent_q(int e = 1) { return LaurentPoly::monomial(e, 0); }
inline LaurentPoly laurent_t(int e = 1) { return LaurentPoly::monomial(0, e); }

}  // namespace mcg
