#include "mcgrep/presentation.hpp"

#include <stdexcept>

namespace mcg {

namespace {

GroupWord hyper(int g) { return GroupWord(Alphabet::hyper_mcg, g); }

Relator braid_relator(int g, int i) {
  GroupWord w = hyper(g);
  w.append(i, 1); w.append(i + 1, 1); w.append(i, 1);
  w.append(i + 1, -1); w.append(i, -1); w.append(i + 1, -1);
  return {"braid T" + std::to_string(i) + " T" + std::to_string(i + 1), w, true};
}

Relator far_commutator(int g, int i, int j) {
  GroupWord w = hyper(g);
  w.append(i, 1); w.append(j, 1); w.append(i, -1); w.append(j, -1);
  return {"comm T" + std::to_string(i) + " T" + std::to_string(j), w, true};
}

}  // namespace

std::vector<Relator> relator_suite(int g) {
  if (g < 4) throw std::invalid_argument("relator suite: genus must be at least 4");
  std::vector<Relator> out;

  for (int i = 1; i <= g - 2; ++i) out.push_back(braid_relator(g, i));
  for (int i = 1; i <= g - 1; ++i)
    for (int j = i + 2; j <= g - 1; ++j) out.push_back(far_commutator(g, i, j));

  out.push_back({"tau", lift_to_hyper(embed_in_sphere(tau_word(g))), true});
  out.push_back({"z", lift_to_hyper(embed_in_sphere(z_word(g))), true});

  for (int i = 1; i <= g - 1; ++i) {
    GroupWord w = hyper(g);
    w.append(kSymR, 1); w.append(i, 1); w.append(kSymR, -1); w.append(i, 1);
    out.push_back({"conj R T" + std::to_string(i), w, true});
  }

  {
    GroupWord w = hyper(g);
    w.append(kSymR, 2);
    out.push_back({"R^2", w, true});
  }
  {
    GroupWord w = hyper(g);
    w.append(kSymY, 2);
    out.push_back({"Y^2", w, false});
  }
  for (int i = 1; i <= g - 1; ++i) {
    GroupWord w = hyper(g);
    w.append(kSymY, 1); w.append(i, 1); w.append(kSymY, -1); w.append(i, -1);
    out.push_back({"comm Y T" + std::to_string(i), w, false});
  }
  {
    GroupWord w = hyper(g);
    w.append(kSymY, 1); w.append(kSymR, 1); w.append(kSymY, -1); w.append(kSymR, -1);
    out.push_back({"comm Y R", w, false});
  }
  return out;
}

GroupWord relator_word(const Relator& r, const std::map<std::string, int>& residues) {
  GroupWord w = r.lift;
  if (r.residue_slot) {
    auto it = residues.find(r.name);
    if (it != residues.end() && it->second % 2 != 0) w.append(kSymY, 1);
  }
  return w;
}

}  // namespace mcg
