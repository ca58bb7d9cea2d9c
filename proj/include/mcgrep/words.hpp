#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mcg {

enum class Alphabet { braid, sphere_ext, hyper_mcg };

// Index generators are 1..g-1; the two index-free letters get fixed codes.
inline constexpr int kSymR = -1;
inline constexpr int kSymY = -2;

struct Letter {
  int sym;
  long exp;
  bool operator==(const Letter&) const = default;
};

bool symbol_in_alphabet(int sym, Alphabet a);
std::string symbol_name(int sym, Alphabet a);

// Word over one alphabet at a fixed genus.  Canonical form is run-length free
// reduction: adjacent letters never share a symbol, exponents are nonzero.
// No group relations are applied at this layer.
class GroupWord {
 public:
  GroupWord(Alphabet a, int genus);

  // Accepts any genus >= 2 so the small braid groups stay testable.  The
  // model-facing entry point is parse_word below.
  static GroupWord parse(std::string_view text, Alphabet a, int genus);

  Alphabet alphabet() const { return alphabet_; }
  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  // Sum of |exponent|, the length in the free group.
  long length() const;

  GroupWord& append(int sym, long exp);
  GroupWord& append(const GroupWord& w);
  GroupWord inverse() const;
  GroupWord pow(long e) const;
  long exponent_sum() const;

  std::string str() const;
  bool operator==(const GroupWord&) const = default;

 private:
  Alphabet alphabet_;
  int genus_;
  std::vector<Letter> letters_;
};

// Grammar: tokens s<k> / T<k> / R / Y with optional ^<int>, and parenthesized
// subwords with an optional power suffix.  Requires genus >= 4, the smallest
// genus the assembled model supports.
GroupWord parse_word(std::string_view text, Alphabet a, int genus);

GroupWord compose(const GroupWord& a, const GroupWord& b);

// Image in the symmetric group on the g punctures times the orientation sign.
// Index letters map to the transposition (i, i+1), R to (id, -1), Y to the
// identity pair.  perm[i] is the 0-based image of puncture i; composition
// applies the left word first.
struct PuncturePermOrient {
  std::vector<int> perm;
  int orient = 1;
};

PuncturePermOrient perm_orient(const GroupWord& w);
PuncturePermOrient compose(const PuncturePermOrient& a, const PuncturePermOrient& b);
bool perm_is_identity(const std::vector<int>& perm);
int perm_sign(const std::vector<int>& perm);
std::string cycle_notation(const std::vector<int>& perm);

// Letterwise T_i -> s_i, R -> R, Y dropped.
GroupWord project_to_sphere(const GroupWord& w);
// Letterwise s_i -> T_i, R -> R; lifts braid or sphere words into the
// hyperelliptic alphabet.
GroupWord lift_to_hyper(const GroupWord& w);
// Alphabet widening, letters unchanged.
GroupWord embed_in_sphere(const GroupWord& braid);

// Y-exponent sum mod 2 of a hyperelliptic word.
int y_parity(const GroupWord& w);

// Kernel words of the braid-to-sphere quotient.
GroupWord tau_word(int genus);  // s1 ... s_{g-1} s_{g-1} ... s1
GroupWord z_word(int genus);    // (s1 ... s_{g-1})^g

}  // namespace mcg
