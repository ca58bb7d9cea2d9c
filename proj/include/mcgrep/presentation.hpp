#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcgrep/words.hpp"

namespace mcg {

// One defining relation of the modeled group.  For relators inherited from
// the extended sphere group the kernel generator may enter with an unknown
// power, so `lift` is the Y-free word and `residue_slot` marks that the full
// relator is lift * Y^eps with eps taken from a residue table.  Relators about
// Y itself carry their Y letters in `lift` and have no slot.
struct Relator {
  std::string name;
  GroupWord lift;
  bool residue_slot = false;
};

// Deterministic tagged relator list:
//   braid relations among adjacent T, commutation of far T pairs,
//   the two lifted kernel words, conjugation of each T by R, R^2,
//   then Y^2 and the centrality commutators.
std::vector<Relator> relator_suite(int g);

// lift * Y^eps, with eps looked up by name (absent names mean 0).
GroupWord relator_word(const Relator& r, const std::map<std::string, int>& residues);

}  // namespace mcg
