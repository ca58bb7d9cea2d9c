#pragma once

#include <string>
#include <vector>

#include "mcgrep/config.hpp"
#include "mcgrep/homology.hpp"
#include "mcgrep/induced.hpp"

namespace mcg {

// The assembled representation: the induced rescaled summand next to the
// homology summand, dimension (g^2-g) + (g-1) = g^2-1.
struct AssembledRep {
  int genus = 0;
  RepConfig config;
  LKTable table;
  ScalarPair scalars;
  LPrime lprime;
  HomologyModel homology;

  int dim() const { return genus * genus - 1; }
};

int l_dim(int g);  // g^2 - 1

// Applies precision and policy from the config.
RescaleUnit solve_unit(const ScalarPair& s, int g, const RepConfig& cfg);

// Default model or the configured override, with config residues overlaid.
HomologyModel load_model(const RepConfig& cfg);

// Builds everything the config calls for.  Throws NotScalarError,
// IncompatibleUnitError, and file or json errors from an override path.
AssembledRep build_rep(const RepConfig& cfg);

RatMat l_eval_exact(const AssembledRep& rep, const GroupWord& w);
IntervalMat l_eval_interval(const AssembledRep& rep, const GroupWord& w, unsigned prec);
AnyMatrix l_eval(const AssembledRep& rep, const GroupWord& w);

enum class Verdict { distinct, equal_exact, uncertified };

const char* verdict_name(Verdict v);

struct CompareResult {
  Verdict verdict = Verdict::uncertified;
  EntryRef witness;   // set for distinct
  std::string detail;
};

// Exact equality exists only in all-rational evaluation; intervals can
// certify inequality but never equality.
CompareResult compare_words(const AssembledRep& rep, const GroupWord& a, const GroupWord& b,
                            bool interval_mode, unsigned prec);

// The commuting square around one word: the induced summand factors through
// the sphere quotient, and an inserted Y flips only the homology block.
CertReport verify_word_maps(const AssembledRep& rep, const GroupWord& w);

struct DimensionReport {
  int genus = 0;
  long main_dim = 0;      // g^2 - 1
  long naive_sum = 0;     // 2g * C(2g-1, 2) + 2(g-1)
  long naive_closed = 0;  // 2(g-1)(2g^2 - g + 1)
  bool identity_holds = false;
  std::string str() const;
};

DimensionReport dimension_report(int g);

// The two naive-count expressions agree as polynomials, not just at sampled
// genera.
bool dimension_identity_symbolic();

// Relation suite on the table matrices, reported instead of thrown.
CertReport lk_relation_report(const LKTable& table);

// Per-genus proof-obligation suite; deterministic bytes for any jobs value.
CertReport certify(const std::vector<int>& genera, const RepConfig& cfg, int jobs);

void export_matrix(const AnyMatrix& m, const std::string& path, const std::string& format);

}  // namespace mcg
