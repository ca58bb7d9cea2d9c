#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgrep/matrix.hpp"
#include "mcgrep/presentation.hpp"
#include "mcgrep/report.hpp"

namespace mcg {

// Action on the (g-1)-dimensional rational first homology: T_i -> a[i-1],
// R -> b, Y -> c.  Any model passing residue_check is acceptable; j records
// the pairing the shipped defaults preserve.
struct HomologyModel {
  int genus = 0;
  std::vector<RatMat> a;
  RatMat b;
  RatMat c;
  RatMat j;
  std::map<std::string, int> residues;
};

// A default lift image landed outside {Id, -Id}, so no residue exists.
struct InconsistentDefaults : std::runtime_error {
  InconsistentDefaults(std::string relator_name, const std::string& detail)
      : std::runtime_error("homology defaults: relator " + relator_name + ": " + detail),
        relator(std::move(relator_name)) {}
  std::string relator;
};

int l2_dim(int g);  // g - 1

// Signed reflections along an A-type chain: each T_i acts by the negated
// simple reflection, R and Y by -Id.  The residue table is recomputed from
// the relator suite on every call.
HomologyModel default_model(int g);

RatMat l2_eval(const HomologyModel& model, const GroupWord& w);

// Per-relator report: lift images of slotted relators must be Id or -Id and
// match the table; Y-relators must evaluate to Id outright; Y itself must act
// nontrivially.
CertReport residue_check(const HomologyModel& model);

HomologyModel model_from_json(const std::string& text);
std::string model_to_json(const HomologyModel& model);

}  // namespace mcg
