#pragma once

#include <utility>
#include <vector>

#include "mcgrep/matrix.hpp"
#include "mcgrep/words.hpp"

namespace mcg {

// Basis of the pair space: (i, j) with 1 <= i < j <= g, lexicographic.
int pair_count(int g);
int pair_index(int i, int j, int g);
std::pair<int, int> pair_at(int idx, int g);

struct LKTable {
  int genus = 0;
  std::vector<LaurentMat> gen;      // gen[k-1] is the image of s_k
  std::vector<LaurentMat> gen_inv;  // built from the inverse action, not inversion
  // the same matrices at a fixed interior rational point, used as an exact
  // one-sided screen by lk_is_identity
  std::vector<RatMat> screen_gen;
  std::vector<RatMat> screen_gen_inv;
};

// Construction always verifies gen[k] * gen_inv[k] = Id exactly, and for
// g <= 6 additionally the full braid relation suite.  Either failure throws:
// it signals a transcription error, not a user error.
LKTable build_lk_table(int g);

LaurentMat lk_eval(const LKTable& table, const GroupWord& w);

// Exact decision of lk_eval(w) == Id.  A rational specialization screens out
// almost every non-identity word; only a word whose screened image is the
// identity pays for the symbolic product.
bool lk_is_identity(const LKTable& table, const GroupWord& w);

}  // namespace mcg
