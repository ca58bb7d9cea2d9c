#include "mcgrep/induced.hpp"

#include <stdexcept>

namespace mcg {

OrientationSplit split_by_orientation(const GroupWord& w) {
  if (w.alphabet() != Alphabet::sphere_ext)
    throw std::invalid_argument("orientation split: expects an extended sphere word");
  OrientationSplit out{GroupWord(Alphabet::braid, w.genus()), 1};
  for (const Letter& l : w.letters()) {
    if (l.sym == kSymR) {
      // R^e contributes only its parity once pushed past everything.
      if (l.exp % 2 != 0) out.sign = -out.sign;
    } else {
      // Each R already to the left crosses this letter on its way out.
      out.braid_part.append(l.sym, out.sign > 0 ? l.exp : -l.exp);
    }
  }
  return out;
}

GroupWord bar_involution(const GroupWord& u) {
  if (u.alphabet() != Alphabet::braid)
    throw std::invalid_argument("bar involution: expects a braid word");
  GroupWord out(Alphabet::braid, u.genus());
  for (const Letter& l : u.letters()) out.append(l.sym, -l.exp);
  return out;
}

int induced_dim(int g) { return 2 * pair_count(g); }

namespace {

template <class S, class Eval>
Dense<S> induced_impl(const LPrime& rep, const GroupWord& w, Eval&& eval) {
  if (w.genus() != rep.genus)
    throw std::invalid_argument("induced: genus mismatch");
  OrientationSplit d = split_by_orientation(w);
  Dense<S> even = eval(d.braid_part);
  Dense<S> odd = eval(bar_involution(d.braid_part));
  return d.sign > 0 ? block_diag(even, odd) : block_antidiag(even, odd);
}

GroupWord sphere_image(const LPrime& rep, const GroupWord& w) {
  if (w.alphabet() != Alphabet::hyper_mcg)
    throw std::invalid_argument("l1: expects a hyperelliptic word");
  if (w.genus() != rep.genus) throw std::invalid_argument("l1: genus mismatch");
  return project_to_sphere(w);
}

}  // namespace

RatMat induced_eval_exact(const LPrime& rep, const GroupWord& w) {
  return induced_impl<Rational>(rep, w,
                                [&](const GroupWord& u) { return lprime_eval_exact(rep, u); });
}

IntervalMat induced_eval_interval(const LPrime& rep, const GroupWord& w, unsigned prec) {
  return induced_impl<Interval>(
      rep, w, [&](const GroupWord& u) { return lprime_eval_interval(rep, u, prec); });
}

AnyMatrix induced_eval(const LPrime& rep, const GroupWord& w) {
  if (rep.unit.exact) return induced_eval_exact(rep, w);
  return induced_eval_interval(rep, w, rep.unit.precision);
}

RatMat l1_eval_exact(const LPrime& rep, const GroupWord& w) {
  return induced_eval_exact(rep, sphere_image(rep, w));
}

IntervalMat l1_eval_interval(const LPrime& rep, const GroupWord& w, unsigned prec) {
  return induced_eval_interval(rep, sphere_image(rep, w), prec);
}

AnyMatrix l1_eval(const LPrime& rep, const GroupWord& w) {
  if (rep.unit.exact) return l1_eval_exact(rep, w);
  return l1_eval_interval(rep, w, rep.unit.precision);
}

}  // namespace mcg
