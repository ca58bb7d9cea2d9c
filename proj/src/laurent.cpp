#include "mcgrep/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

Rational LaurentPoly::specialize(const Rational& q0, const Rational& t0) const {
  if (q0.is_zero() || t0.is_zero())
    throw std::domain_error("laurent: specialization at zero");
  Rational acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * q0.pow(m.q) * t0.pow(m.t);
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.q + mb.q, ma.t + mb.t}, ca * cb);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = c.abs();
    bool unit_coeff = a.is_one() && (m.q != 0 || m.t != 0);
    if (!unit_coeff) os << a.str();
    if (m.q != 0) {
      if (!unit_coeff) os << "*";
      os << "q";
      if (m.q != 1) os << "^" << m.q;
      unit_coeff = false;
    }
    if (m.t != 0) {
      if (!unit_coeff) os << "*";
      os << "t";
      if (m.t != 1) os << "^" << m.t;
    }
  }
  return os.str();
}

}  // namespace mcg
