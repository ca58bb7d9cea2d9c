#include "mcgrep/assembly.hpp"

#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "mcgrep/garside.hpp"
#include "mcgrep/matrix_io.hpp"
#include "mcgrep/sampler.hpp"

namespace mcg {

int l_dim(int g) { return g * g - 1; }

RescaleUnit solve_unit(const ScalarPair& s, int g, const RepConfig& cfg) {
  RescaleUnit unit = solve_rescale_unit(s.lambda_tau, s.lambda_z, g, cfg.precision);
  if (cfg.policy == RescalePolicy::require_exact && !unit.exact)
    throw IncompatibleUnitError("rescale unit: lambda_tau = " + s.lambda_tau.str() +
                                " has no rational root and the policy requires one");
  return unit;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string at_str(Eigen::Index r, Eigen::Index c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

HomologyModel load_model(const RepConfig& cfg) {
  HomologyModel model = cfg.homology_override.empty()
                            ? default_model(cfg.genus)
                            : model_from_json(read_file(cfg.homology_override));
  if (model.genus != cfg.genus)
    throw std::runtime_error("homology override is for genus " +
                             std::to_string(model.genus) + ", expected " +
                             std::to_string(cfg.genus));
  for (const auto& [name, eps] : cfg.residues) model.residues[name] = eps;
  return model;
}

AssembledRep build_rep(const RepConfig& cfg) {
  if (cfg.genus < 4) throw std::invalid_argument("assembled rep: genus must be at least 4");
  AssembledRep rep;
  rep.genus = cfg.genus;
  rep.config = cfg;
  rep.table = build_lk_table(cfg.genus);
  rep.scalars = check_scalarity(rep.table, cfg.q0, cfg.t0);
  rep.lprime = make_lprime(rep.table, cfg.q0, cfg.t0, solve_unit(rep.scalars, cfg.genus, cfg));
  rep.homology = load_model(cfg);
  return rep;
}

RatMat l_eval_exact(const AssembledRep& rep, const GroupWord& w) {
  return block_diag(l1_eval_exact(rep.lprime, w), l2_eval(rep.homology, w));
}

IntervalMat l_eval_interval(const AssembledRep& rep, const GroupWord& w, unsigned prec) {
  return block_diag(l1_eval_interval(rep.lprime, w, prec),
                    to_interval(l2_eval(rep.homology, w), prec));
}

AnyMatrix l_eval(const AssembledRep& rep, const GroupWord& w) {
  if (rep.lprime.unit.exact) return l_eval_exact(rep, w);
  return l_eval_interval(rep, w, rep.lprime.unit.precision);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::distinct: return "distinct";
    case Verdict::equal_exact: return "equal-exact";
    case Verdict::uncertified: return "uncertified";
  }
  return "?";
}

CompareResult compare_words(const AssembledRep& rep, const GroupWord& a, const GroupWord& b,
                            bool interval_mode, unsigned prec) {
  CompareResult res;
  if (!interval_mode && rep.lprime.unit.exact) {
    RatMat ma = l_eval_exact(rep, a);
    RatMat mb = l_eval_exact(rep, b);
    EntryRef at;
    if (first_difference(ma, mb, &at)) {
      res.verdict = Verdict::distinct;
      res.witness = at;
      res.detail = "entry " + at_str(at.row, at.col) + ": " + ma(at.row, at.col).str() +
                   " vs " + mb(at.row, at.col).str();
    } else {
      res.verdict = Verdict::equal_exact;
      res.detail = "all " + std::to_string(ma.rows()) + "x" + std::to_string(ma.cols()) +
                   " entries agree";
    }
    return res;
  }
  IntervalMat ma = l_eval_interval(rep, a, prec);
  IntervalMat mb = l_eval_interval(rep, b, prec);
  for (Eigen::Index i = 0; i < ma.rows(); ++i)
    for (Eigen::Index j = 0; j < ma.cols(); ++j)
      if (!ma(i, j).intersects(mb(i, j))) {
        res.verdict = Verdict::distinct;
        res.witness = {i, j};
        res.detail = "entry " + at_str(i, j) + ": " + ma(i, j).str() + " and " +
                     mb(i, j).str() + " are disjoint";
        return res;
      }
  res.verdict = Verdict::uncertified;
  res.detail = "interval images overlap entrywise at precision " + std::to_string(prec);
  return res;
}

namespace {

RatMat negated(const RatMat& m) {
  RatMat r = m;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

GroupWord with_y_inserted(const GroupWord& w, std::size_t pos) {
  GroupWord out(Alphabet::hyper_mcg, w.genus());
  std::size_t i = 0;
  for (const Letter& l : w.letters()) {
    if (i++ == pos) out.append(kSymY, 1);
    out.append(l.sym, l.exp);
  }
  if (pos >= w.letters().size()) out.append(kSymY, 1);
  return out;
}

}  // namespace

CertReport verify_word_maps(const AssembledRep& rep, const GroupWord& w) {
  CertReport report;
  if (w.alphabet() != Alphabet::hyper_mcg) {
    report.fail("word alphabet", "expects a hyperelliptic word");
    return report;
  }
  if (!rep.lprime.unit.exact) {
    report.uncertified("word maps", "interval unit, equalities cannot be asserted");
    return report;
  }

  RatMat l1 = l1_eval_exact(rep.lprime, w);
  if (mat_equal(l1, induced_eval_exact(rep.lprime, project_to_sphere(w))))
    report.pass("induced summand factors through the sphere image");
  else
    report.fail("induced summand factors through the sphere image", "images differ");

  RatMat l2 = l2_eval(rep.homology, w);
  RatMat l2neg = negated(l2);
  bool l1_stable = true, l2_flips = true;
  for (std::size_t pos : {std::size_t{0}, w.letters().size() / 2, w.letters().size()}) {
    GroupWord v = with_y_inserted(w, pos);
    l1_stable = l1_stable && mat_equal(l1_eval_exact(rep.lprime, v), l1);
    l2_flips = l2_flips && mat_equal(l2_eval(rep.homology, v), l2neg);
  }
  if (l1_stable) report.pass("inserting Y leaves the induced summand");
  else report.fail("inserting Y leaves the induced summand", "image moved");
  if (l2_flips) report.pass("inserting Y negates the homology summand");
  else report.fail("inserting Y negates the homology summand", "image is not the negation");
  return report;
}

std::string DimensionReport::str() const {
  std::string line = "genus " + std::to_string(genus) + ": representation dimension " +
                     std::to_string(main_dim) + "; naive comparison 2g*C(2g-1,2)+2(g-1) = " +
                     std::to_string(naive_sum) + " and 2(g-1)(2g^2-g+1) = " +
                     std::to_string(naive_closed);
  line += identity_holds ? "; identity holds" : "; identity FAILS";
  return line;
}

DimensionReport dimension_report(int g) {
  if (g < 4) throw std::invalid_argument("dimension report: genus must be at least 4");
  const long lg = g;
  DimensionReport r;
  r.genus = g;
  r.main_dim = lg * lg - 1;
  r.naive_sum = 2 * lg * ((2 * lg - 1) * (2 * lg - 2) / 2) + 2 * (lg - 1);
  r.naive_closed = 2 * (lg - 1) * (2 * lg * lg - lg + 1);
  r.identity_holds = r.naive_sum == r.naive_closed;
  return r;
}

bool dimension_identity_symbolic() {
  // One variable is enough; reuse the q slot of the Laurent ring as g.
  LaurentPoly g = laurent_q(1);
  LaurentPoly one(1), two(2);
  LaurentPoly lhs = g * (two * g - one) * (two * g - two) + two * (g - one);
  LaurentPoly rhs = two * (g - one) * (two * g * g - g + one);
  return lhs == rhs;
}

CertReport lk_relation_report(const LKTable& table) {
  CertReport report;
  const int g = table.genus;
  auto check = [&](std::string name, const LaurentMat& lhs, const LaurentMat& rhs) {
    EntryRef at;
    if (!first_difference(lhs, rhs, &at)) {
      report.pass(std::move(name));
    } else {
      report.fail(std::move(name), "entry " + at_str(at.row, at.col) + ": " +
                                       lhs(at.row, at.col).str() + " vs " +
                                       rhs(at.row, at.col).str());
    }
  };
  const Eigen::Index n = pair_count(g);
  LaurentMat id = identity<LaurentPoly>(n);
  for (int i = 1; i <= g - 2; ++i)
    check("lk braid s" + std::to_string(i) + " s" + std::to_string(i + 1),
          LaurentMat(table.gen[i - 1] * table.gen[i] * table.gen[i - 1]),
          LaurentMat(table.gen[i] * table.gen[i - 1] * table.gen[i]));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = i + 2; j <= g - 1; ++j)
      check("lk comm s" + std::to_string(i) + " s" + std::to_string(j),
            LaurentMat(table.gen[i - 1] * table.gen[j - 1]),
            LaurentMat(table.gen[j - 1] * table.gen[i - 1]));
  for (int i = 1; i <= g - 1; ++i) {
    check("lk inverse s" + std::to_string(i),
          LaurentMat(table.gen[i - 1] * table.gen_inv[i - 1]), id);
    check("lk inverse order s" + std::to_string(i),
          LaurentMat(table.gen_inv[i - 1] * table.gen[i - 1]), id);
  }
  return report;
}

namespace {

GroupWord random_braid_word(Sampler& s, int g, long len) {
  GroupWord w(Alphabet::braid, g);
  for (long i = 0; i < len; ++i) w.append(static_cast<int>(s.range(1, g - 1)), s.coin() ? 1 : -1);
  return w;
}

GroupWord random_sphere_word(Sampler& s, int g, long len) {
  GroupWord w(Alphabet::sphere_ext, g);
  for (long i = 0; i < len; ++i) {
    if (s.below(4) == 0) w.append(kSymR, 1);
    else w.append(static_cast<int>(s.range(1, g - 1)), s.coin() ? 1 : -1);
  }
  return w;
}

GroupWord insert_braid_relator(Sampler& s, const GroupWord& w, int g) {
  GroupWord out(Alphabet::braid, g);
  const std::size_t cut = static_cast<std::size_t>(s.range(0, static_cast<long>(w.letters().size())));
  const int k = static_cast<int>(s.range(1, g - 2));
  auto relator = [&] {
    out.append(k, 1); out.append(k + 1, 1); out.append(k, 1);
    out.append(k + 1, -1); out.append(k, -1); out.append(k + 1, -1);
  };
  std::size_t pos = 0;
  for (const Letter& l : w.letters()) {
    if (pos++ == cut) relator();
    out.append(l.sym, l.exp);
  }
  if (cut >= w.letters().size()) relator();
  return out;
}

bool zero_entry(const Rational& v) { return v.is_zero(); }
bool zero_entry(const Interval& v) { return v.is_point() && v.lo().is_zero(); }
bool one_entry(const Rational& v) { return v.is_one(); }
bool one_entry(const Interval& v) { return v.is_point() && v.lo() == Rational(1); }

template <class S>
bool half_blocks_zero(const Dense<S>& m, Eigen::Index n, bool diag_zero) {
  if (m.rows() != 2 * n || m.cols() != 2 * n) return false;
  for (Eigen::Index r = 0; r < 2 * n; ++r)
    for (Eigen::Index c = 0; c < 2 * n; ++c) {
      bool diag_block = (r < n) == (c < n);
      if (diag_block == diag_zero && !zero_entry(m(r, c))) return false;
    }
  return true;
}

template <class S>
bool point_identity(const Dense<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (r == c ? !one_entry(m(r, c)) : !zero_entry(m(r, c))) return false;
  return true;
}

bool any_point_identity(const AnyMatrix& m) {
  return std::visit(
      [](const auto& v) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LaurentMat>) return false;
        else return point_identity(v);
      },
      m);
}

// Id checks in the two live domains.  Exact matrices decide; intervals can
// only refute, so a non-refuted interval result is "uncertified".
void identity_entry(CertReport& report, const std::string& name, const AssembledRep& rep,
                    const GroupWord& w) {
  if (rep.lprime.unit.exact) {
    RatMat m = l_eval_exact(rep, w);
    EntryRef at;
    if (!first_difference(m, identity<Rational>(m.rows()), &at)) {
      report.pass(name);
    } else {
      report.fail(name, "entry " + at_str(at.row, at.col) + " = " + m(at.row, at.col).str());
    }
    return;
  }
  IntervalMat m = l_eval_interval(rep, w, rep.lprime.unit.precision);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c).excludes(Rational(r == c ? 1 : 0))) {
        report.fail(name, "entry " + at_str(r, c) + " = " + m(r, c).str() +
                              " excludes the identity value");
        return;
      }
  report.uncertified(name, "consistent with the identity at precision " +
                               std::to_string(rep.lprime.unit.precision));
}

CertReport certify_genus(int g, const RepConfig& base) {
  CertReport report;
  RepConfig cfg = base;
  cfg.genus = g;

  LKTable table;
  try {
    table = build_lk_table(g);
    report.pass("lk table construction");
  } catch (const std::exception& e) {
    report.fail("lk table construction", e.what());
    return report;
  }
  report.absorb(lk_relation_report(table));

  {
    Sampler s(0x6d636772u ^ static_cast<std::uint64_t>(g));
    int disagreements = 0;
    std::string first;
    for (int trial = 0; trial < 120; ++trial) {
      GroupWord w(Alphabet::braid, g);
      if (trial % 6 == 0) {
        GroupWord u = random_braid_word(s, g, s.range(1, 8));
        w = insert_braid_relator(s, compose(u, u.inverse()), g);
      } else {
        w = random_braid_word(s, g, s.range(0, 14));
      }
      if (lk_is_identity(table, w) != is_trivial_braid(w)) {
        ++disagreements;
        if (first.empty()) first = w.str();
      }
    }
    if (disagreements == 0) report.pass("word problem agreement (120 words)");
    else
      report.fail("word problem agreement (120 words)",
                  std::to_string(disagreements) + " disagreements, first on " + first);
  }

  ScalarPair scalars;
  try {
    scalars = check_scalarity(table, cfg.q0, cfg.t0);
    report.add("kernel scalarity", CheckStatus::pass,
               "lambda_tau = " + scalars.lambda_tau.str() +
                   ", lambda_z = " + scalars.lambda_z.str());
  } catch (const NotScalarError& e) {
    report.fail("kernel scalarity", e.what());
    return report;
  }
  if (scalars_compatible(scalars, g)) {
    report.pass("scalar compatibility");
  } else {
    report.fail("scalar compatibility", "lambda_tau^g != lambda_z^2");
    return report;
  }

  AssembledRep rep;
  rep.genus = g;
  rep.config = cfg;
  rep.scalars = scalars;
  try {
    rep.lprime = make_lprime(table, cfg.q0, cfg.t0, solve_unit(scalars, g, cfg));
    report.add("rescale unit", CheckStatus::pass, rep.lprime.unit.str());
  } catch (const std::exception& e) {
    report.fail("rescale unit", e.what());
    return report;
  }
  rep.table = std::move(table);

  {
    if (rep.lprime.unit.exact) {
      report.add("rescaled tau is the identity",
                 is_identity(lprime_eval_exact(rep.lprime, tau_word(g))) ? CheckStatus::pass
                                                                         : CheckStatus::fail);
      report.add("rescaled z is the identity",
                 is_identity(lprime_eval_exact(rep.lprime, z_word(g))) ? CheckStatus::pass
                                                                       : CheckStatus::fail);
    } else {
      auto bounded = [&](const GroupWord& w, const std::string& name) {
        IntervalMat m = lprime_eval_interval(rep.lprime, w, cfg.precision);
        EntryRef at;
        if (separates(m, identity<Rational>(m.rows()), &at))
          report.fail(name, "entry " + at_str(at.row, at.col) + " excludes the identity value");
        else
          report.uncertified(name, "consistent with the identity at precision " +
                                       std::to_string(cfg.precision));
      };
      bounded(tau_word(g), "rescaled tau is the identity");
      bounded(z_word(g), "rescaled z is the identity");
    }
  }

  {
    Sampler s(0x696e6475u ^ static_cast<std::uint64_t>(g));
    const Eigen::Index n = pair_count(g);
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < 60 && ok; ++trial) {
      GroupWord w = random_sphere_word(s, g, s.range(0, 12));
      OrientationSplit d = split_by_orientation(w);
      ok = std::visit(
          [&](const auto& m) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, LaurentMat>) return false;
            else return half_blocks_zero(m, n, d.sign < 0);
          },
          induced_eval(rep.lprime, w));
      if (!ok) witness = w.str();
    }
    if (ok) report.pass("induced block structure (60 words)");
    else report.fail("induced block structure (60 words)", "pattern broken on " + witness);

    GroupWord rr(Alphabet::sphere_ext, g);
    rr.append(kSymR, 2);
    bool involution = std::visit([](const auto& m) {
      if constexpr (std::is_same_v<std::decay_t<decltype(m)>, LaurentMat>) return false;
      else return point_identity(m);
    }, induced_eval(rep.lprime, rr));
    report.add("induced reflection involution",
               involution ? CheckStatus::pass : CheckStatus::fail);
  }

  try {
    rep.homology = load_model(cfg);
    report.pass("homology model load");
  } catch (const std::exception& e) {
    report.fail("homology model load", e.what());
    return report;
  }
  report.absorb(residue_check(rep.homology), "homology ");

  for (const Relator& r : relator_suite(g))
    identity_entry(report, "L relator " + r.name, rep, relator_word(r, rep.homology.residues));

  {
    GroupWord y(Alphabet::hyper_mcg, g);
    y.append(kSymY, 1);
    report.add("separation l1(Y) = Id",
               any_point_identity(l1_eval(rep.lprime, y)) ? CheckStatus::pass
                                                          : CheckStatus::fail);
    RatMat hy = l2_eval(rep.homology, y);
    EntryRef at;
    if (first_difference(hy, identity<Rational>(hy.rows()), &at)) {
      report.add("separation l2(Y) != Id", CheckStatus::pass,
                 "entry " + at_str(at.row, at.col) + " = " + hy(at.row, at.col).str());
      report.add("separation L(Y) != Id", CheckStatus::pass,
                 "entry " + at_str(induced_dim(g) + at.row, induced_dim(g) + at.col) +
                     " = " + hy(at.row, at.col).str());
    } else {
      report.fail("separation l2(Y) != Id", "the image of Y is the identity");
      report.fail("separation L(Y) != Id", "no witness entry");
    }
    report.add("separation L(Y)^2 = Id",
               any_point_identity(l_eval(rep, compose(y, y))) ? CheckStatus::pass
                                                              : CheckStatus::fail);
  }

  {
    DimensionReport dims = dimension_report(g);
    bool ok = dims.identity_holds && dimension_identity_symbolic();
    report.add("dimension identity", ok ? CheckStatus::pass : CheckStatus::fail, dims.str());
    GroupWord empty(Alphabet::hyper_mcg, g);
    Eigen::Index rows = std::visit([](const auto& m) { return m.rows(); }, l_eval(rep, empty));
    bool blocks = induced_dim(g) + l2_dim(g) == l_dim(g) && rows == l_dim(g);
    report.add("dimension blocks", blocks ? CheckStatus::pass : CheckStatus::fail,
               std::to_string(induced_dim(g)) + " + " + std::to_string(l2_dim(g)) + " = " +
                   std::to_string(l_dim(g)));
  }

  return report;
}

}  // namespace

CertReport certify(const std::vector<int>& genera, const RepConfig& cfg, int jobs) {
  if (genera.empty()) throw std::invalid_argument("certify: empty genus list");
  for (int g : genera)
    if (g < 4)
      throw std::invalid_argument("certify: genus must be at least 4, got " +
                                  std::to_string(g));
  std::vector<CertReport> parts(genera.size());
  if (jobs > 1 && genera.size() > 1) {
    std::vector<std::future<CertReport>> futures;
    futures.reserve(genera.size());
    for (int g : genera)
      futures.push_back(
          std::async(std::launch::async, [g, &cfg] { return certify_genus(g, cfg); }));
    for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < genera.size(); ++i) parts[i] = certify_genus(genera[i], cfg);
  }
  CertReport out;
  for (std::size_t i = 0; i < genera.size(); ++i)
    out.absorb(parts[i], "g=" + std::to_string(genera[i]) + ": ");
  return out;
}

void export_matrix(const AnyMatrix& m, const std::string& path, const std::string& format) {
  std::string text;
  if (format == "json") text = matrix_to_json(m) + "\n";
  else if (format == "csv") text = matrix_to_csv(m);
  else throw std::invalid_argument("export: format must be json or csv");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export: cannot write " + path);
  out << text;
  out.flush();
  if (!out.good()) throw std::runtime_error("export: write failed for " + path);
}

}  // namespace mcg
