#include "mcgrep/homology.hpp"

#include <json.hpp>

#include "mcgrep/matrix_io.hpp"

namespace mcg {

namespace {

using nlohmann::json;

RatMat neg_identity(Eigen::Index n) {
  RatMat m = identity<Rational>(n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(-1);
  return m;
}

std::string entry_witness(const RatMat& have, const RatMat& want) {
  EntryRef at;
  first_difference(have, want, &at);
  return "entry (" + std::to_string(at.row) + "," + std::to_string(at.col) + ") = " +
         have(at.row, at.col).str();
}

}  // namespace

int l2_dim(int g) { return g - 1; }

HomologyModel default_model(int g) {
  if (g < 4) throw std::invalid_argument("homology: genus must be at least 4");
  const int n = g - 1;
  HomologyModel m;
  m.genus = g;

  m.j = RatMat(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.j(r, c) = Rational(r == c ? 2 : (r - c == 1 || c - r == 1 ? -1 : 0));

  for (int i = 1; i <= n; ++i) {
    // Negated simple reflection: row i of the identity flipped against its
    // neighbors.
    RatMat a = neg_identity(n);
    a(i - 1, i - 1) = Rational(1);
    if (i - 2 >= 0) a(i - 1, i - 2) = Rational(-1);
    if (i < n) a(i - 1, i) = Rational(-1);
    m.a.push_back(a);
  }
  m.b = neg_identity(n);
  m.c = neg_identity(n);

  // Each inherited relator determines its own extension sign.
  for (const Relator& r : relator_suite(g)) {
    if (!r.residue_slot) continue;
    RatMat img = l2_eval(m, r.lift);
    if (is_identity(img)) m.residues[r.name] = 0;
    else if (mat_equal(img, neg_identity(n))) m.residues[r.name] = 1;
    else throw InconsistentDefaults(r.name, entry_witness(img, identity<Rational>(n)));
  }

  // The defaults preserve the pairing.  Overrides are judged by residue_check
  // alone, so this stays out of the loaders.
  for (const RatMat& gen : m.a)
    if (!mat_equal(RatMat(gen.transpose() * m.j * gen), m.j))
      throw std::logic_error("homology defaults: pairing not preserved");

  return m;
}

RatMat l2_eval(const HomologyModel& model, const GroupWord& w) {
  if (w.alphabet() != Alphabet::hyper_mcg)
    throw std::invalid_argument("l2: expects a hyperelliptic word");
  if (w.genus() != model.genus) throw std::invalid_argument("l2: genus mismatch");
  const int n = l2_dim(model.genus);
  RatMat acc = identity<Rational>(n);
  std::map<int, RatMat> inv_cache;
  auto base = [&](int sym) -> const RatMat& {
    if (sym == kSymR) return model.b;
    if (sym == kSymY) return model.c;
    return model.a[static_cast<std::size_t>(sym) - 1];
  };
  for (const Letter& l : w.letters()) {
    const RatMat* m = &base(l.sym);
    if (l.exp < 0) {
      auto it = inv_cache.find(l.sym);
      if (it == inv_cache.end()) it = inv_cache.emplace(l.sym, inverse(*m)).first;
      m = &it->second;
    }
    for (long i = l.exp > 0 ? l.exp : -l.exp; i > 0; --i) acc = (acc * *m).eval();
  }
  return acc;
}

CertReport residue_check(const HomologyModel& model) {
  CertReport report;
  const int g = model.genus;
  const int n = l2_dim(g);

  bool shape = g >= 4 && model.a.size() == static_cast<std::size_t>(n) &&
               model.b.rows() == n && model.b.cols() == n && model.c.rows() == n &&
               model.c.cols() == n;
  for (const RatMat& a : model.a) shape = shape && a.rows() == n && a.cols() == n;
  if (!shape) {
    report.fail("model shape", "expected " + std::to_string(n) + " generator matrices of size " +
                                   std::to_string(n) + "x" + std::to_string(n));
    return report;
  }
  report.pass("model shape");

  if (is_identity(model.c)) {
    report.fail("separation Y", "the image of Y is the identity");
  } else {
    report.add("separation Y", CheckStatus::pass,
               entry_witness(model.c, identity<Rational>(n)));
  }

  const RatMat id = identity<Rational>(n);
  const RatMat neg = neg_identity(n);
  for (const Relator& r : relator_suite(g)) {
    const std::string check = "relator " + r.name;
    RatMat img = l2_eval(model, r.lift);
    if (!r.residue_slot) {
      if (is_identity(img)) report.pass(check);
      else report.fail(check, entry_witness(img, id));
      continue;
    }
    int found;
    if (mat_equal(img, id)) found = 0;
    else if (mat_equal(img, neg)) found = 1;
    else {
      report.fail(check, "lift image is neither Id nor -Id, " + entry_witness(img, id));
      continue;
    }
    auto it = model.residues.find(r.name);
    if (it == model.residues.end()) {
      report.fail(check, "no residue entry");
    } else if (it->second % 2 != found) {
      report.fail(check, "lift image matches Y^" + std::to_string(found) +
                             " but the table says " + std::to_string(it->second));
    } else {
      report.pass(check);
    }
  }
  return report;
}

namespace {

RatMat rational_matrix_field(const std::string& key, const json& value, int n) {
  AnyMatrix m = matrix_from_json(value.dump());
  if (!std::holds_alternative<RatMat>(m))
    throw std::runtime_error("homology model json: " + key + " must be a rational matrix");
  RatMat r = std::get<RatMat>(std::move(m));
  if (r.rows() != n || r.cols() != n)
    throw std::runtime_error("homology model json: " + key + " must be " + std::to_string(n) +
                             "x" + std::to_string(n));
  return r;
}

}  // namespace

HomologyModel model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("homology model json: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("homology model json: expected an object");
  for (const char* key : {"g", "A", "B", "C", "J", "residues"})
    if (!doc.contains(key))
      throw std::runtime_error(std::string("homology model json: missing key ") + key);

  if (!doc["g"].is_number_integer())
    throw std::runtime_error("homology model json: g must be an integer");
  const int g = doc["g"].get<int>();
  if (g < 4) throw std::runtime_error("homology model json: genus must be at least 4");
  const int n = l2_dim(g);

  HomologyModel m;
  m.genus = g;
  if (!doc["A"].is_array() || doc["A"].size() != static_cast<std::size_t>(n))
    throw std::runtime_error("homology model json: A must list " + std::to_string(n) +
                             " matrices");
  for (const json& el : doc["A"]) m.a.push_back(rational_matrix_field("A", el, n));
  m.b = rational_matrix_field("B", doc["B"], n);
  m.c = rational_matrix_field("C", doc["C"], n);
  m.j = rational_matrix_field("J", doc["J"], n);

  if (!doc["residues"].is_object())
    throw std::runtime_error("homology model json: residues must be an object");
  for (const auto& [name, value] : doc["residues"].items()) {
    if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1))
      throw std::runtime_error("homology model json: residue " + name + " must be 0 or 1");
    m.residues[name] = value.get<int>();
  }
  return m;
}

std::string model_to_json(const HomologyModel& model) {
  json doc;
  doc["g"] = model.genus;
  doc["A"] = json::array();
  for (const RatMat& a : model.a) doc["A"].push_back(json::parse(matrix_to_json(a)));
  doc["B"] = json::parse(matrix_to_json(model.b));
  doc["C"] = json::parse(matrix_to_json(model.c));
  doc["J"] = json::parse(matrix_to_json(model.j));
  json res = json::object();
  for (const auto& [name, eps] : model.residues) res[name] = eps;
  doc["residues"] = res;
  return doc.dump(2);
}

}  // namespace mcg
