#include "mcgrep/garside.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcg {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Perm half_twist(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
  return p;
}

namespace {

Perm adjacent_swap(int n, int slot) {
  Perm p = perm_identity(n);
  p[static_cast<std::size_t>(slot)] = slot + 1;
  p[static_cast<std::size_t>(slot + 1)] = slot;
  return p;
}

bool is_identity_perm(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// slot i is a starting generator iff p(i) > p(i+1)
std::vector<bool> starting_set(const Perm& p) {
  std::vector<bool> s(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) s[i] = p[i] > p[i + 1];
  return s;
}

std::vector<bool> finishing_set(const Perm& p) { return starting_set(perm_inverse(p)); }

void drop_identities(std::vector<Perm>& fs) {
  std::erase_if(fs, [](const Perm& f) { return is_identity_perm(f); });
}

// Restore the left-weighted chain: sweep adjacent pairs, sliding starting
// generators of the right factor that the left factor can still absorb, until
// a full sweep makes no transfer.  Then migrate half-twist factors into the
// delta power.
void normalize(long& delta, std::vector<Perm>& fs, int n) {
  const Perm w0 = half_twist(n);
  bool changed = true;
  while (changed) {
    changed = false;
    drop_identities(fs);
    for (std::size_t j = fs.size(); j-- > 1;) {
      for (;;) {
        if (is_identity_perm(fs[j])) break;
        std::vector<bool> fin = finishing_set(fs[j - 1]);
        std::vector<bool> start = starting_set(fs[j]);
        int slot = -1;
        for (int i = 0; i < n - 1; ++i)
          if (start[static_cast<std::size_t>(i)] && !fin[static_cast<std::size_t>(i)]) {
            slot = i;
            break;
          }
        if (slot < 0) break;
        Perm t = adjacent_swap(n, slot);
        fs[j - 1] = perm_compose(fs[j - 1], t);
        fs[j] = perm_compose(t, fs[j]);
        changed = true;
      }
    }
  }
  drop_identities(fs);
  std::size_t lead = 0;
  while (lead < fs.size() && fs[lead] == w0) ++lead;
  if (lead) {
    delta += static_cast<long>(lead);
    fs.erase(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(lead));
  }
}

}  // namespace

GarsideNF normal_form(const GroupWord& w) {
  if (w.alphabet() != Alphabet::braid)
    throw std::invalid_argument("normal form: expected a braid word");
  const int n = w.genus();
  const Perm w0 = half_twist(n);
  long delta = 0;
  std::vector<Perm> fs;
  for (const Letter& l : w.letters()) {
    const int slot = l.sym - 1;
    const long reps = l.exp > 0 ? l.exp : -l.exp;
    for (long r = 0; r < reps; ++r) {
      if (l.exp > 0) {
        fs.push_back(adjacent_swap(n, slot));
      } else {
        // x sigma^-1 = delta^-1 (delta-conjugate of x)(delta sigma^-1)
        delta -= 1;
        for (Perm& f : fs) f = perm_compose(perm_compose(w0, f), w0);
        fs.push_back(perm_compose(w0, adjacent_swap(n, slot)));
      }
      normalize(delta, fs, n);
    }
  }
  return GarsideNF{delta, std::move(fs)};
}

bool is_trivial_braid(const GroupWord& w) {
  GarsideNF nf = normal_form(w);
  return nf.delta_power == 0 && nf.factors.empty();
}

std::string GarsideNF::str() const {
  std::ostringstream out;
  out << "delta^" << delta_power;
  for (const Perm& f : factors) out << " . " << cycle_notation(f);
  return out.str();
}

}  // namespace mcg
