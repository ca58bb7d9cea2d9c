#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcgrep/assembly.hpp"
#include "mcgrep/garside.hpp"
#include "mcgrep/matrix_io.hpp"
#include "mcgrep/presentation.hpp"

using namespace mcg;

namespace {

// Exit codes: 0 all requested checks passed (compare: a definite verdict),
// 1 a check failed, 2 usage or computation error, 3 uncertified comparison.

struct GlobalOpts {
  int genus = 0;            // 0: leave the config value alone
  std::string config_path;
  long precision = 0;       // 0: leave the config value alone
  std::string mode = "exact";

  bool interval() const { return mode == "interval"; }
};

RepConfig resolve_config(const GlobalOpts& go) {
  RepConfig cfg;
  if (!go.config_path.empty()) cfg = load_config(go.config_path);
  if (go.genus != 0) cfg.genus = go.genus;
  if (go.precision != 0) cfg.precision = static_cast<unsigned>(go.precision);
  return cfg;
}

std::string join_tokens(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

void print_matrix(const AnyMatrix& m) { std::cout << matrix_to_json(m) << "\n"; }

int run_eval(const GlobalOpts& go, const std::vector<std::string>& tokens) {
  RepConfig cfg = resolve_config(go);
  AssembledRep rep = build_rep(cfg);
  GroupWord w = parse_word(join_tokens(tokens), Alphabet::hyper_mcg, cfg.genus);
  if (go.interval()) print_matrix(l_eval_interval(rep, w, cfg.precision));
  else print_matrix(l_eval(rep, w));
  return 0;
}

int run_compare(const GlobalOpts& go, const std::string& a, const std::string& b) {
  RepConfig cfg = resolve_config(go);
  AssembledRep rep = build_rep(cfg);
  GroupWord wa = parse_word(a, Alphabet::hyper_mcg, cfg.genus);
  GroupWord wb = parse_word(b, Alphabet::hyper_mcg, cfg.genus);
  CompareResult res = compare_words(rep, wa, wb, go.interval(), cfg.precision);
  std::cout << verdict_name(res.verdict);
  if (!res.detail.empty()) std::cout << ": " << res.detail;
  std::cout << "\n";
  return res.verdict == Verdict::uncertified ? 3 : 0;
}

int run_certify(const GlobalOpts& go, std::vector<int> genera, int jobs) {
  RepConfig cfg = resolve_config(go);
  if (genera.empty()) genera.push_back(cfg.genus);
  CertReport report = certify(genera, cfg, jobs);
  std::cout << report.str();
  return report.ok() ? 0 : 1;
}

int run_relators(const GlobalOpts& go) {
  RepConfig cfg = resolve_config(go);
  HomologyModel model = load_model(cfg);
  auto suite = relator_suite(cfg.genus);
  for (const Relator& r : suite) {
    std::cout << r.name << " = " << relator_word(r, model.residues).str();
    if (!r.residue_slot) std::cout << "  [fixed]";
    std::cout << "\n";
  }
  std::cout << "relators: " << suite.size() << "\n";
  return 0;
}

int run_braid_nf(const GlobalOpts& go, const std::vector<std::string>& tokens) {
  RepConfig cfg = resolve_config(go);
  GroupWord w = parse_word(join_tokens(tokens), Alphabet::braid, cfg.genus);
  GarsideNF nf = normal_form(w);
  std::cout << nf.str() << "\n";
  std::cout << (is_trivial_braid(w) ? "trivial" : "nontrivial") << "\n";
  return 0;
}

int run_lk_eval(const GlobalOpts& go, const std::vector<std::string>& tokens) {
  RepConfig cfg = resolve_config(go);
  LKTable table = build_lk_table(cfg.genus);
  GroupWord w = parse_word(join_tokens(tokens), Alphabet::braid, cfg.genus);
  print_matrix(lk_eval(table, w));
  return 0;
}

int run_l1_eval(const GlobalOpts& go, const std::vector<std::string>& tokens) {
  RepConfig cfg = resolve_config(go);
  AssembledRep rep = build_rep(cfg);
  GroupWord w = parse_word(join_tokens(tokens), Alphabet::hyper_mcg, cfg.genus);
  if (go.interval()) print_matrix(l1_eval_interval(rep.lprime, w, cfg.precision));
  else print_matrix(l1_eval(rep.lprime, w));
  return 0;
}

int run_l2_eval(const GlobalOpts& go, const std::vector<std::string>& tokens) {
  RepConfig cfg = resolve_config(go);
  HomologyModel model = load_model(cfg);
  GroupWord w = parse_word(join_tokens(tokens), Alphabet::hyper_mcg, cfg.genus);
  print_matrix(l2_eval(model, w));
  return 0;
}

int run_l2_check(const GlobalOpts& go) {
  RepConfig cfg = resolve_config(go);
  CertReport report = residue_check(load_model(cfg));
  std::cout << report.str();
  return report.ok() ? 0 : 1;
}

int run_rescale_solve(const GlobalOpts& go, const std::string& lt, const std::string& lz) {
  RepConfig cfg = resolve_config(go);
  ScalarPair s{Rational::from_string(lt), Rational::from_string(lz)};
  RescaleUnit unit = solve_unit(s, cfg.genus, cfg);
  std::cout << unit.str() << "\n";
  return 0;
}

int run_dims(const GlobalOpts& go, std::vector<int> genera) {
  RepConfig cfg = resolve_config(go);
  if (genera.empty()) genera.push_back(cfg.genus);
  bool ok = true;
  for (int g : genera) {
    DimensionReport d = dimension_report(g);
    std::cout << d.str() << "\n";
    ok = ok && d.identity_holds;
  }
  bool symbolic = dimension_identity_symbolic();
  std::cout << "symbolic identity: " << (symbolic ? "holds" : "FAILS") << "\n";
  return ok && symbolic ? 0 : 1;
}

int run_export(const GlobalOpts& go, const std::string& what, const std::string& out,
               const std::string& format, const std::vector<std::string>& tokens) {
  RepConfig cfg = resolve_config(go);
  if (what == "homology") {
    if (!tokens.empty()) throw std::invalid_argument("export: homology takes no word");
    if (format != "json") throw std::invalid_argument("export: homology models are json only");
    std::ofstream file(out);
    if (!file) throw std::runtime_error("export: cannot write " + out);
    file << model_to_json(load_model(cfg)) << "\n";
    if (!file.good()) throw std::runtime_error("export: write failed for " + out);
  } else {
    if (tokens.empty()) throw std::invalid_argument("export: a word is required for " + what);
    std::string text = join_tokens(tokens);
    AnyMatrix m;
    if (what == "lk") {
      m = lk_eval(build_lk_table(cfg.genus), parse_word(text, Alphabet::braid, cfg.genus));
    } else {
      AssembledRep rep = build_rep(cfg);
      GroupWord w = parse_word(text, Alphabet::hyper_mcg, cfg.genus);
      if (what == "l") m = go.interval() ? AnyMatrix(l_eval_interval(rep, w, cfg.precision))
                                         : l_eval(rep, w);
      else if (what == "l1") m = go.interval()
                                     ? AnyMatrix(l1_eval_interval(rep.lprime, w, cfg.precision))
                                     : l1_eval(rep.lprime, w);
      else m = AnyMatrix(l2_eval(rep.homology, w));
    }
    export_matrix(m, out, format);
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification engine for the genus-g hyperelliptic"
               " mapping class group representation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts go;
  app.add_option("-g,--genus", go.genus, "surface genus (at least 4)");
  app.add_option("-c,--config", go.config_path, "configuration file");
  app.add_option("--precision", go.precision, "interval precision in bits")
      ->check(CLI::Range(2l, 1l << 20));
  app.add_option("--mode", go.mode, "evaluation mode")
      ->check(CLI::IsMember({"exact", "interval"}));

  std::vector<std::string> tokens;
  std::string word_a, word_b;
  std::vector<int> genera;
  int jobs = 1;
  std::string lambda_tau, lambda_z;
  std::string what = "l", out_path, format = "json";

  CLI::App* eval = app.add_subcommand("eval", "image of a word under the assembled representation");
  eval->add_option("word", tokens, "word in T1..T<g-1>, R, Y")->required();

  CLI::App* compare = app.add_subcommand("compare", "decide whether two words have distinct images");
  compare->add_option("a", word_a, "first word")->required();
  compare->add_option("b", word_b, "second word")->required();

  CLI::App* certify_cmd = app.add_subcommand("certify", "run the full per-genus check suite");
  certify_cmd->add_option("--genera", genera, "comma-separated genus list")->delimiter(',');
  certify_cmd->add_option("-j,--jobs", jobs, "worker threads across genera")
      ->check(CLI::Range(1, 64));

  CLI::App* relators = app.add_subcommand("relators", "print the relator suite with residues applied");

  CLI::App* braid_nf = app.add_subcommand("braid-nf", "Garside normal form of a braid word");
  braid_nf->add_option("word", tokens, "word in s1..s<g-1>")->required();

  CLI::App* lk = app.add_subcommand("lk-eval", "Laurent matrix of a braid word");
  lk->add_option("word", tokens, "word in s1..s<g-1>")->required();

  CLI::App* l1 = app.add_subcommand("l1-eval", "induced rescaled block of a word");
  l1->add_option("word", tokens, "word in T1..T<g-1>, R, Y")->required();

  CLI::App* l2 = app.add_subcommand("l2-eval", "homology block of a word");
  l2->add_option("word", tokens, "word in T1..T<g-1>, R, Y")->required();

  CLI::App* l2c = app.add_subcommand("l2-check", "residue and separation checks on the homology model");

  CLI::App* rs = app.add_subcommand("rescale-solve", "solve for the rescaling unit of a scalar pair");
  rs->add_option("--lambda-tau", lambda_tau, "scalar of tau, as a rational")->required();
  rs->add_option("--lambda-z", lambda_z, "scalar of z, as a rational")->required();

  CLI::App* dims = app.add_subcommand("dims", "dimension report and the closed-form identity");
  dims->add_option("--genera", genera, "comma-separated genus list")->delimiter(',');

  CLI::App* exp = app.add_subcommand("export", "write a matrix or the homology model to a file");
  exp->add_option("--what", what, "l, l1, l2, lk, or homology")
      ->check(CLI::IsMember({"l", "l1", "l2", "lk", "homology"}));
  exp->add_option("-o,--out", out_path, "output path")->required();
  exp->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("word", tokens, "word for the matrix exports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(go, tokens);
    if (app.got_subcommand(compare)) return run_compare(go, word_a, word_b);
    if (app.got_subcommand(certify_cmd)) return run_certify(go, genera, jobs);
    if (app.got_subcommand(relators)) return run_relators(go);
    if (app.got_subcommand(braid_nf)) return run_braid_nf(go, tokens);
    if (app.got_subcommand(lk)) return run_lk_eval(go, tokens);
    if (app.got_subcommand(l1)) return run_l1_eval(go, tokens);
    if (app.got_subcommand(l2)) return run_l2_eval(go, tokens);
    if (app.got_subcommand(l2c)) return run_l2_check(go);
    if (app.got_subcommand(rs)) return run_rescale_solve(go, lambda_tau, lambda_z);
    if (app.got_subcommand(dims)) return run_dims(go, genera);
    if (app.got_subcommand(exp)) return run_export(go, what, out_path, format, tokens);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
