#include "mcgrep/lk.hpp"

#include <stdexcept>
#include <string>

namespace mcg {

int pair_count(int g) { return g * (g - 1) / 2; }

int pair_index(int i, int j, int g) {
  // lexicographic: (1,2), (1,3), ..., (1,g), (2,3), ...
  return (i - 1) * g - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_at(int idx, int g) {
  for (int i = 1; i < g; ++i) {
    int row = g - i;
    if (idx < row) return {i, i + 1 + idx};
    idx -= row;
  }
  throw std::out_of_range("pair index out of range");
}

namespace {

LaurentPoly qp(int e, int num = 1, int den = 1) {
  return LaurentPoly::monomial(e, 0, Rational(num, den));
}

// image of the basis vector (i,j) under s_k, written into column `col`
void forward_column(LaurentMat& m, int g, int k, int i, int j, int col) {
  auto add = [&](int a, int b, const LaurentPoly& c) {
    m(pair_index(a, b, g), col) += c;
  };
  const LaurentPoly one(1);
  const LaurentPoly q = laurent_q();
  const LaurentPoly t = laurent_t();
  if (k < i - 1 || k > j) {
    add(i, j, one);
  } else if (k == i - 1) {
    add(i - 1, j, one);
    add(i, j, one - q);
  } else if (k == i && k == j - 1) {
    add(i, j, t * q * q);
  } else if (k == i) {
    add(i, i + 1, t * q * (q - one));
    add(i + 1, j, q);
  } else if (k < j - 1) {
    add(i, j, one);
    add(k, k + 1, t * LaurentPoly::monomial(k - i, 0) * (q - one) * (q - one));
  } else if (k == j - 1) {
    add(i, j - 1, one);
    add(j - 1, j, t * LaurentPoly::monomial(j - i, 0) * (q - one));
  } else {  // k == j
    add(i, j, one - q);
    add(i, j + 1, q);
  }
}

// image of (a,b) under s_k^-1; solved case by case from the forward action
void inverse_column(LaurentMat& m, int g, int k, int a, int b, int col) {
  auto add = [&](int x, int y, const LaurentPoly& c) {
    m(pair_index(x, y, g), col) += c;
  };
  const LaurentPoly one(1);
  const LaurentPoly qinv = laurent_q(-1);
  const LaurentPoly one_minus_qinv = one - qinv;
  if (b < k || a > k + 1) {
    add(a, b, one);
  } else if (a == k && b == k + 1) {
    add(k, k + 1, LaurentPoly::monomial(-2, -1));
  } else if (a == k) {  // b > k+1
    add(k, b, one_minus_qinv);
    add(k + 1, b, one);
    add(k, k + 1, -(one_minus_qinv * one_minus_qinv));
  } else if (a == k + 1) {  // b > k+1
    add(k, b, qinv);
    add(k, k + 1, -(qinv - LaurentPoly::monomial(-2, 0)));
  } else if (b == k) {  // a < k
    add(a, k + 1, one);
    add(k, k + 1, -(laurent_q() - one) * qp(k - 1 - a));
  } else if (b == k + 1) {  // a < k
    add(a, k, qinv);
    add(a, k + 1, one_minus_qinv);
    LaurentPoly qm1 = laurent_q() - one;
    add(k, k + 1, -(qm1 * qm1 * qp(k - 2 - a)));
  } else {  // a < k < b-1
    LaurentPoly qm1 = laurent_q() - one;
    add(a, b, one);
    add(k, k + 1, -(qm1 * qm1 * qp(k - a - 2)));
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("lk table: " + what);
}

}  // namespace

LKTable build_lk_table(int g) {
  if (g < 4) throw std::invalid_argument("lk table: genus must be at least 4");
  const int n = pair_count(g);
  LKTable table;
  table.genus = g;
  for (int k = 1; k <= g - 1; ++k) {
    LaurentMat fwd(n, n), inv(n, n);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) {
        fwd(r, c) = LaurentPoly(0);
        inv(r, c) = LaurentPoly(0);
      }
    for (int c = 0; c < n; ++c) {
      auto [i, j] = pair_at(c, g);
      forward_column(fwd, g, k, i, j, c);
      inverse_column(inv, g, k, i, j, c);
    }
    table.gen.push_back(fwd);
    table.gen_inv.push_back(inv);
  }

  for (int k = 0; k < g - 1; ++k) {
    require(is_identity(LaurentMat(table.gen[k] * table.gen_inv[k])),
            "generator times inverse is not the identity");
    require(is_identity(LaurentMat(table.gen_inv[k] * table.gen[k])),
            "inverse times generator is not the identity");
  }
  if (g <= 6) {
    for (int k = 0; k + 1 < g - 1; ++k)
      require(mat_equal(LaurentMat(table.gen[k] * table.gen[k + 1] * table.gen[k]),
                        LaurentMat(table.gen[k + 1] * table.gen[k] * table.gen[k + 1])),
              "braid relation fails at k=" + std::to_string(k + 1));
    for (int k = 0; k < g - 1; ++k)
      for (int l = k + 2; l < g - 1; ++l)
        require(mat_equal(LaurentMat(table.gen[k] * table.gen[l]),
                          LaurentMat(table.gen[l] * table.gen[k])),
                "far commutation fails");
  }

  const Rational q0(2), t0(3);
  for (int k = 0; k < g - 1; ++k) {
    table.screen_gen.push_back(specialize_matrix(table.gen[k], q0, t0));
    table.screen_gen_inv.push_back(specialize_matrix(table.gen_inv[k], q0, t0));
  }
  return table;
}

LaurentMat lk_eval(const LKTable& table, const GroupWord& w) {
  if (w.alphabet() != Alphabet::braid)
    throw std::invalid_argument("lk eval: expected a braid word");
  if (w.genus() != table.genus) throw std::invalid_argument("lk eval: genus mismatch");
  const int n = pair_count(table.genus);
  LaurentMat acc = identity<LaurentPoly>(n);
  for (const Letter& l : w.letters()) {
    const LaurentMat& m = l.exp > 0 ? table.gen[static_cast<std::size_t>(l.sym - 1)]
                                    : table.gen_inv[static_cast<std::size_t>(l.sym - 1)];
    const long reps = l.exp > 0 ? l.exp : -l.exp;
    for (long r = 0; r < reps; ++r) acc = acc * m;
  }
  return acc;
}

bool lk_is_identity(const LKTable& table, const GroupWord& w) {
  if (w.alphabet() != Alphabet::braid)
    throw std::invalid_argument("lk eval: expected a braid word");
  if (w.genus() != table.genus) throw std::invalid_argument("lk eval: genus mismatch");
  const int n = pair_count(table.genus);
  RatMat acc = identity<Rational>(n);
  for (const Letter& l : w.letters()) {
    const RatMat& m = l.exp > 0 ? table.screen_gen[static_cast<std::size_t>(l.sym - 1)]
                                : table.screen_gen_inv[static_cast<std::size_t>(l.sym - 1)];
    const long reps = l.exp > 0 ? l.exp : -l.exp;
    for (long r = 0; r < reps; ++r) acc = acc * m;
  }
  // a non-identity screened image certifies the symbolic image is not the
  // identity; an identity screen proves nothing and the symbolic product
  // decides
  if (!is_identity(acc)) return false;
  return is_identity(lk_eval(table, w));
}

}  // namespace mcg
