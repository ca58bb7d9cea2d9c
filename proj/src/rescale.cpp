#include "mcgrep/rescale.hpp"

#include <stdexcept>
#include <utility>

namespace mcg {

namespace {

std::pair<std::vector<RatMat>, std::vector<RatMat>> specialize_table(const LKTable& table,
                                                                     const Rational& q0,
                                                                     const Rational& t0) {
  std::vector<RatMat> gen, gen_inv;
  gen.reserve(table.gen.size());
  gen_inv.reserve(table.gen_inv.size());
  for (const LaurentMat& m : table.gen) gen.push_back(specialize_matrix(m, q0, t0));
  for (const LaurentMat& m : table.gen_inv) gen_inv.push_back(specialize_matrix(m, q0, t0));
  return {std::move(gen), std::move(gen_inv)};
}

RatMat word_product(const std::vector<RatMat>& gen, const std::vector<RatMat>& gen_inv, int g,
                    const GroupWord& w) {
  RatMat acc = identity<Rational>(pair_count(g));
  for (const Letter& l : w.letters()) {
    const RatMat& m = l.exp > 0 ? gen[l.sym - 1] : gen_inv[l.sym - 1];
    for (long i = l.exp > 0 ? l.exp : -l.exp; i > 0; --i) acc = (acc * m).eval();
  }
  return acc;
}

// Reads off the diagonal constant, or throws with the first entry breaking
// scalarity.
Rational scalar_of(const RatMat& m, const char* word) {
  const Rational lambda = m(0, 0);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Rational expected = r == c ? lambda : Rational(0);
      if (m(r, c) != expected) throw NotScalarError(word, r, c, m(r, c).str());
    }
  return lambda;
}

}  // namespace

ScalarPair check_scalarity(const LKTable& table, const Rational& q0, const Rational& t0) {
  auto [gen, gen_inv] = specialize_table(table, q0, t0);
  const int g = table.genus;
  ScalarPair s;
  s.lambda_tau = scalar_of(word_product(gen, gen_inv, g, tau_word(g)), "tau");
  s.lambda_z = scalar_of(word_product(gen, gen_inv, g, z_word(g)), "z");
  return s;
}

bool scalars_compatible(const ScalarPair& s, int g) {
  return s.lambda_tau.pow(g) == s.lambda_z.pow(2);
}

std::string RescaleUnit::str() const {
  if (exact) return "u = " + value_exact.str() + " (exact)";
  return "u in " + value_interval.str() + " (prec " + std::to_string(precision) + ")";
}

RescaleUnit solve_rescale_unit(const Rational& lambda_tau, const Rational& lambda_z, int g,
                               unsigned precision) {
  if (g < 4) throw std::invalid_argument("rescale unit: genus must be at least 4");
  if (lambda_tau.sign() <= 0 || lambda_z.sign() <= 0)
    throw IncompatibleUnitError("rescale unit: scalars must be positive, got lambda_tau = " +
                                lambda_tau.str() + ", lambda_z = " + lambda_z.str());
  // Both exponents are even, so a common root forces lambda_tau^g = lambda_z^2.
  if (lambda_tau.pow(g) != lambda_z.pow(2))
    throw IncompatibleUnitError("rescale unit: lambda_tau^" + std::to_string(g) +
                                " != lambda_z^2 for lambda_tau = " + lambda_tau.str() +
                                ", lambda_z = " + lambda_z.str());

  const long n1 = 2L * (g - 1);
  const long n2 = static_cast<long>(g) * (g - 1);

  RescaleUnit u;
  u.genus = g;
  u.precision = precision;
  u.lambda_tau = lambda_tau;
  u.lambda_z = lambda_z;

  Rational root;
  if (nth_root_exact(lambda_tau, static_cast<unsigned long>(n1), &root)) {
    if (root.pow(n2) != lambda_z)
      throw IncompatibleUnitError("rescale unit: root " + root.str() + " of lambda_tau = " +
                                  lambda_tau.str() + " has " + root.str() + "^" +
                                  std::to_string(n2) + " != lambda_z = " + lambda_z.str());
    u.exact = true;
    u.value_exact = root;
    u.value_interval = Interval(root, precision);
    return u;
  }

  // lambda_tau has no rational n1-th root (a rational p/q in lowest terms is an
  // exact root iff p^n1/q^n1 matches, which nth_root_exact decides), so no
  // bisection midpoint ever lands on the root and the bracket stays strict.
  Rational lo(1), hi(1);
  if (lambda_tau > Rational(1)) hi = lambda_tau; else lo = lambda_tau;
  const Rational eps = Rational(1, 2).pow(static_cast<long>(precision));
  const unsigned long scale_bits =
      mpz_sizeinbase(lambda_tau.num().get_mpz_t(), 2) +
      mpz_sizeinbase(lambda_tau.den().get_mpz_t(), 2);
  const unsigned long cap = precision + scale_bits + 64;
  unsigned long steps = 0;
  while (hi - lo >= eps) {
    if (++steps > cap)
      throw PrecisionExhaustedError("rescale unit: bisection exceeded " + std::to_string(cap) +
                                    " steps before width 2^-" + std::to_string(precision));
    const Rational mid = (lo + hi) / Rational(2);
    if (mid.pow(n1) < lambda_tau) lo = mid; else hi = mid;
  }

  // The same unit must also be the n2-th root of lambda_z.
  if (!(lo.pow(n2) <= lambda_z && lambda_z <= hi.pow(n2)))
    throw IncompatibleUnitError("rescale unit: lambda_z = " + lambda_z.str() +
                                " escapes the bracket [" + lo.str() + ", " + hi.str() +
                                "]^" + std::to_string(n2));
  u.exact = false;
  u.value_interval = Interval::raw(lo, hi, precision);
  return u;
}

LPrime make_lprime(const LKTable& table, const Rational& q0, const Rational& t0,
                   const RescaleUnit& unit) {
  if (unit.genus != table.genus)
    throw std::invalid_argument("lprime: unit genus " + std::to_string(unit.genus) +
                                " does not match table genus " + std::to_string(table.genus));
  LPrime rep;
  rep.genus = table.genus;
  rep.q0 = q0;
  rep.t0 = t0;
  rep.unit = unit;
  std::tie(rep.gen, rep.gen_inv) = specialize_table(table, q0, t0);
  return rep;
}

RatMat lprime_raw_product(const LPrime& rep, const GroupWord& w) {
  if (w.alphabet() != Alphabet::braid)
    throw std::invalid_argument("lprime: expects a braid word");
  if (w.genus() != rep.genus) throw std::invalid_argument("lprime: genus mismatch");
  return word_product(rep.gen, rep.gen_inv, rep.genus, w);
}

RatMat lprime_eval_exact(const LPrime& rep, const GroupWord& w) {
  if (!rep.unit.exact) throw std::domain_error("lprime: unit is not exact");
  RatMat m = lprime_raw_product(rep, w);
  const Rational scale = rep.unit.value_exact.pow(-w.exponent_sum());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) *= scale;
  return m;
}

IntervalMat lprime_eval_interval(const LPrime& rep, const GroupWord& w, unsigned prec) {
  IntervalMat m = to_interval(lprime_raw_product(rep, w), prec);
  const Interval unit = rep.unit.exact ? Interval(rep.unit.value_exact, prec)
                                       : rep.unit.value_interval;
  const Interval scale = unit.pow(-w.exponent_sum());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) * scale;
  return m;
}

AnyMatrix lprime_eval(const LPrime& rep, const GroupWord& w) {
  if (rep.unit.exact) return lprime_eval_exact(rep, w);
  return lprime_eval_interval(rep, w, rep.unit.precision);
}

}  // namespace mcg
