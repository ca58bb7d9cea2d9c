#pragma once

#include <map>
#include <string>

#include "mcgrep/interval.hpp"
#include "mcgrep/rational.hpp"

namespace mcg {

enum class RescalePolicy {
  prefer_exact,   // exact when the root is rational, interval otherwise
  require_exact,  // refuse an irrational unit
};

struct RepConfig {
  int genus = 4;
  Rational q0 = Rational(1);
  Rational t0 = Rational(1);
  unsigned precision = kDefaultPrecision;
  RescalePolicy policy = RescalePolicy::prefer_exact;
  std::string homology_override;          // model file path, empty for builtins
  std::map<std::string, int> residues;    // overlaid on the model's table
};

// Plain-text key-value format:
//   [parameters]  genus, q0, t0 (rational strings)
//   [rescale]     precision (bits), policy (prefer-exact | require-exact)
//   [homology]    override (path to a model json)
//   [residues]    one relator name per line, value 0 or 1
// '#' starts a comment.  Unknown sections and keys are errors.
RepConfig parse_config(const std::string& text);

// Reads the file and resolves a relative override path against its directory.
RepConfig load_config(const std::string& path);

}  // namespace mcg
