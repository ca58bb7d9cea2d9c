#pragma once

#include <Eigen/Core>
#include <bit>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mcgrep/interval.hpp"
#include "mcgrep/laurent.hpp"
#include "mcgrep/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mcg::Rational> : GenericNumTraits<mcg::Rational> {
  typedef mcg::Rational Real;
  typedef mcg::Rational NonInteger;
  typedef mcg::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32
  };
  static inline Real epsilon() { return mcg::Rational(0); }
  static inline Real dummy_precision() { return mcg::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mcg::LaurentPoly> : GenericNumTraits<mcg::LaurentPoly> {
  typedef mcg::LaurentPoly Real;
  typedef mcg::LaurentPoly NonInteger;
  typedef mcg::LaurentPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 128
  };
  static inline Real epsilon() { return mcg::LaurentPoly(0); }
  static inline Real dummy_precision() { return mcg::LaurentPoly(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mcg::Interval> : GenericNumTraits<mcg::Interval> {
  typedef mcg::Interval Real;
  typedef mcg::Interval NonInteger;
  typedef mcg::Interval Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static inline Real epsilon() { return mcg::Interval(0); }
  static inline Real dummy_precision() { return mcg::Interval(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace mcg {

template <class S>
using Dense = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using RatMat = Dense<Rational>;
using LaurentMat = Dense<LaurentPoly>;
using IntervalMat = Dense<Interval>;

template <class S>
Dense<S> identity(Eigen::Index n) {
  Dense<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = S(i == j ? 1 : 0);
  return m;
}

template <class S>
bool mat_equal(const Dense<S>& a, const Dense<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool is_identity(const Dense<S>& m) {
  if (m.rows() != m.cols()) return false;
  return mat_equal(m, identity<S>(m.rows()));
}

struct EntryRef {
  Eigen::Index row = -1;
  Eigen::Index col = -1;
};

// First position (row-major order) where the matrices differ.
template <class S>
bool first_difference(const Dense<S>& a, const Dense<S>& b, EntryRef* where) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) {
        if (where) *where = {i, j};
        return true;
      }
  return false;
}

template <class S>
Dense<S> block_diag(const Dense<S>& a, const Dense<S>& b) {
  Dense<S> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = S(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// a sits top-right, b bottom-left.
template <class S>
Dense<S> block_antidiag(const Dense<S>& a, const Dense<S>& b) {
  Dense<S> m(a.rows() + b.rows(), b.cols() + a.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = S(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, b.cols() + j) = a(i, j);
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

inline RatMat specialize_matrix(const LaurentMat& m, const Rational& q0, const Rational& t0) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).specialize(q0, t0);
  return r;
}

inline IntervalMat to_interval(const RatMat& m, unsigned prec) {
  IntervalMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Interval(m(i, j), prec);
  return r;
}

// Entrywise: every interval contains the corresponding rational value.
inline bool encloses(const IntervalMat& m, const RatMat& v) {
  if (m.rows() != v.rows() || m.cols() != v.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).contains(v(i, j))) return false;
  return true;
}

// Some interval lies strictly away from the corresponding rational value.
inline bool separates(const IntervalMat& m, const RatMat& v, EntryRef* where = nullptr) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).excludes(v(i, j))) {
        if (where) *where = {i, j};
        return true;
      }
  return false;
}

inline Rational det(RatMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const Eigen::Index n = m.rows();
  Rational d(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      d = -d;
    }
    d = d * m(c, c);
    Rational pivinv = m(c, c).inv();
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) * pivinv;
      for (Eigen::Index j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
    }
  }
  return d;
}

// Expansion over column subsets; the submatrix on the first popcount(mask)
// rows and column set `mask` is computed once.  Exponential table, only
// intended for the small symbolic blocks.
inline LaurentPoly det(const LaurentMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const unsigned n = static_cast<unsigned>(m.rows());
  if (n > 20) throw std::invalid_argument("det: symbolic determinant limited to dimension 20");
  if (n == 0) return LaurentPoly(1);
  std::vector<LaurentPoly> table(std::size_t(1) << n);
  table[0] = LaurentPoly(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    const unsigned r = static_cast<unsigned>(std::popcount(mask)) - 1;
    LaurentPoly acc(0);
    unsigned pos = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (!(mask & (std::uint32_t(1) << j))) continue;
      if (!m(r, j).is_zero()) {
        LaurentPoly term = m(r, j) * table[mask ^ (std::uint32_t(1) << j)];
        if ((r + pos) & 1) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    table[mask] = std::move(acc);
  }
  return table[(std::uint32_t(1) << n) - 1];
}

inline RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = m.rows();
  RatMat a = m;
  RatMat inv = identity<Rational>(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c) {
      a.row(p).swap(a.row(c));
      inv.row(p).swap(inv.row(c));
    }
    Rational pivinv = a(c, c).inv();
    for (Eigen::Index j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * pivinv;
      inv(c, j) = inv(c, j) * pivinv;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Rational f = a(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

enum class Domain { rational, laurent, interval };

using AnyMatrix = std::variant<RatMat, LaurentMat, IntervalMat>;

inline Domain domain_of(const AnyMatrix& m) {
  return static_cast<Domain>(m.index());
}

inline const char* domain_name(Domain d) {
  switch (d) {
    case Domain::rational: return "rational";
    case Domain::laurent: return "laurent";
    case Domain::interval: return "interval";
  }
  return "?";
}

inline Eigen::Index any_dim(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}

}  // namespace mcg
