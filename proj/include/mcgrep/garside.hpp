#pragma once

#include <string>
#include <vector>

#include "mcgrep/words.hpp"

namespace mcg {

// Permutations of {0..n-1} as image vectors; perm_compose applies the left
// argument first, matching word concatenation.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
// x -> n-1-x, the permutation of the half twist.
Perm half_twist(int n);

// Left-greedy form delta^d F_1 ... F_k: every factor is a permutation braid,
// none is the identity or the half twist, and each pair (F_j, F_{j+1}) is
// left-weighted.  Two braid words are equal iff their forms are equal.
struct GarsideNF {
  long delta_power = 0;
  std::vector<Perm> factors;
  bool operator==(const GarsideNF&) const = default;
  std::string str() const;
};

GarsideNF normal_form(const GroupWord& w);
bool is_trivial_braid(const GroupWord& w);

}  // namespace mcg
