#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mcgrep/interval.hpp"
#include "mcgrep/lk.hpp"

namespace mcg {

// A specialized kernel-word image failed to be a scalar matrix; carries the
// first offending entry.
struct NotScalarError : std::runtime_error {
  NotScalarError(std::string word, Eigen::Index r, Eigen::Index c, std::string entry)
      : std::runtime_error("image of " + word + " is not scalar: entry (" + std::to_string(r) +
                           "," + std::to_string(c) + ") = " + entry),
        word_name(std::move(word)), row(r), col(c), value(std::move(entry)) {}
  std::string word_name;
  Eigen::Index row, col;
  std::string value;
};

// No single positive real unit satisfies both root conditions.
struct IncompatibleUnitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScalarPair {
  Rational lambda_tau;
  Rational lambda_z;
};

// Specializes the two kernel words and verifies both images are exactly
// scalar.  Throws NotScalarError otherwise.
ScalarPair check_scalarity(const LKTable& table, const Rational& q0, const Rational& t0);

// lambda_tau^g = lambda_z^2, the relation any common unit forces.
bool scalars_compatible(const ScalarPair& s, int g);

// Positive real unit u with u^(2(g-1)) = lambda_tau and u^(g(g-1)) = lambda_z,
// exact when the root is rational, otherwise a certified interval.
struct RescaleUnit {
  int genus = 0;
  bool exact = false;
  Rational value_exact;
  Interval value_interval;
  unsigned precision = kDefaultPrecision;
  Rational lambda_tau;
  Rational lambda_z;

  Interval as_interval() const {
    return exact ? Interval(value_exact, precision) : value_interval;
  }
  std::string str() const;
};

RescaleUnit solve_rescale_unit(const Rational& lambda_tau, const Rational& lambda_z, int g,
                               unsigned precision);

// L' evaluator: the lk table specialized at (q0, t0), scaled per word by
// unit^(-exponent sum).
struct LPrime {
  int genus = 0;
  Rational q0, t0;
  RescaleUnit unit;
  std::vector<RatMat> gen, gen_inv;
};

LPrime make_lprime(const LKTable& table, const Rational& q0, const Rational& t0,
                   const RescaleUnit& unit);

// Unscaled specialized product.
RatMat lprime_raw_product(const LPrime& rep, const GroupWord& w);
// Requires an exact unit.
RatMat lprime_eval_exact(const LPrime& rep, const GroupWord& w);
// Works for both unit kinds; interval entries carry `prec`.
IntervalMat lprime_eval_interval(const LPrime& rep, const GroupWord& w, unsigned prec);
AnyMatrix lprime_eval(const LPrime& rep, const GroupWord& w);

}  // namespace mcg
