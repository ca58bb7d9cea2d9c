#pragma once

#include "mcgrep/rescale.hpp"

namespace mcg {

// Image of an extended sphere word in B_g x {+1,-1}: every R is pushed to the
// right end, negating the exponent of each generator it crosses.  The word
// equals braid_part when sign is +1 and braid_part followed by R when -1.
struct OrientationSplit {
  GroupWord braid_part;
  int sign = 1;
};

OrientationSplit split_by_orientation(const GroupWord& w);

// The exponent-negating automorphism s_k -> s_k^-1, conjugation by R.
GroupWord bar_involution(const GroupWord& u);

int induced_dim(int g);  // g^2 - g, twice the pair count

// Induction of the rescaled representation to the extended sphere group along
// the orientation subgroup, with coset basis (1, R).  An even word lands in
// the diagonal blocks (braid_part, then its bar image), an odd word in the
// antidiagonal ones.
RatMat induced_eval_exact(const LPrime& rep, const GroupWord& w);
IntervalMat induced_eval_interval(const LPrime& rep, const GroupWord& w, unsigned prec);
AnyMatrix induced_eval(const LPrime& rep, const GroupWord& w);

// First summand of the assembled representation: induced evaluation of the
// sphere image of a hyperelliptic word.  Kills Y.
RatMat l1_eval_exact(const LPrime& rep, const GroupWord& w);
IntervalMat l1_eval_interval(const LPrime& rep, const GroupWord& w, unsigned prec);
AnyMatrix l1_eval(const LPrime& rep, const GroupWord& w);

}  // namespace mcg
