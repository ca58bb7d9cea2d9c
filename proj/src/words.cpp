#include "mcgrep/words.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcg {

bool symbol_in_alphabet(int sym, Alphabet a) {
  if (sym >= 1) return true;
  if (sym == kSymR) return a == Alphabet::sphere_ext || a == Alphabet::hyper_mcg;
  if (sym == kSymY) return a == Alphabet::hyper_mcg;
  return false;
}

std::string symbol_name(int sym, Alphabet a) {
  if (sym == kSymR) return "R";
  if (sym == kSymY) return "Y";
  return (a == Alphabet::hyper_mcg ? "T" : "s") + std::to_string(sym);
}

GroupWord::GroupWord(Alphabet a, int genus) : alphabet_(a), genus_(genus) {
  if (genus < 2) throw std::invalid_argument("word: genus must be at least 2");
}

long GroupWord::length() const {
  long n = 0;
  for (const Letter& l : letters_) n += std::labs(l.exp);
  return n;
}

GroupWord& GroupWord::append(int sym, long exp) {
  if (!symbol_in_alphabet(sym, alphabet_))
    throw std::invalid_argument("word: symbol not in alphabet");
  if (sym >= genus_)
    throw std::invalid_argument("word: generator index out of range for genus " +
                                std::to_string(genus_));
  if (exp == 0) return *this;
  if (!letters_.empty() && letters_.back().sym == sym) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return *this;
  }
  letters_.push_back({sym, exp});
  return *this;
}

GroupWord& GroupWord::append(const GroupWord& w) {
  if (w.alphabet_ != alphabet_ || w.genus_ != genus_)
    throw std::invalid_argument("word: alphabet or genus mismatch");
  for (const Letter& l : w.letters_) append(l.sym, l.exp);
  return *this;
}

GroupWord GroupWord::inverse() const {
  GroupWord r(alphabet_, genus_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.append(it->sym, -it->exp);
  return r;
}

GroupWord GroupWord::pow(long e) const {
  GroupWord base = e >= 0 ? *this : inverse();
  long k = e >= 0 ? e : -e;
  GroupWord r(alphabet_, genus_);
  for (long i = 0; i < k; ++i) r.append(base);
  return r;
}

long GroupWord::exponent_sum() const {
  long n = 0;
  for (const Letter& l : letters_) n += l.exp;
  return n;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) out << ' ';
    first = false;
    out << symbol_name(l.sym, alphabet_);
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

GroupWord compose(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a;
  r.append(b);
  return r;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  Alphabet alphabet;
  int genus;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word parse: " + what + " at position " +
                                std::to_string(pos + 1));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  long parse_integer() {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  }

  long parse_opt_power() {
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return parse_integer();
    }
    return 1;
  }

  GroupWord parse_sequence(bool inside_group) {
    GroupWord w(alphabet, genus);
    for (;;) {
      skip_ws();
      if (pos == text.size()) {
        if (inside_group) fail("missing ')'");
        return w;
      }
      char c = text[pos];
      if (c == ')') {
        if (!inside_group) fail("unexpected ')'");
        return w;
      }
      if (c == '(') {
        ++pos;
        GroupWord inner = parse_sequence(true);
        ++pos;  // the ')'
        w.append(inner.pow(parse_opt_power()));
        continue;
      }
      if (c == '1') {
        // identity token, how the empty word prints
        ++pos;
        continue;
      }
      if (c == 'R' || c == 'Y') {
        int sym = c == 'R' ? kSymR : kSymY;
        if (!symbol_in_alphabet(sym, alphabet)) fail(std::string("letter '") + c + "' not in this alphabet");
        ++pos;
        w.append(sym, parse_opt_power());
        continue;
      }
      char gen = alphabet == Alphabet::hyper_mcg ? 'T' : 's';
      if (c != gen) fail(std::string("unexpected character '") + c + "'");
      ++pos;
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected generator index");
      long idx = parse_integer();
      if (idx < 1 || idx > genus - 1)
        fail("generator index " + std::to_string(idx) + " out of range for genus " +
             std::to_string(genus));
      w.append(static_cast<int>(idx), parse_opt_power());
    }
  }
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text, Alphabet a, int genus) {
  if (genus < 2) throw std::invalid_argument("word parse: genus must be at least 2");
  Parser p{text, 0, a, genus};
  GroupWord w = p.parse_sequence(false);
  return w;
}

GroupWord parse_word(std::string_view text, Alphabet a, int genus) {
  if (genus < 4) throw std::invalid_argument("word parse: genus must be at least 4");
  return GroupWord::parse(text, a, genus);
}

PuncturePermOrient perm_orient(const GroupWord& w) {
  const int g = w.genus();
  PuncturePermOrient r;
  r.perm.resize(g);
  std::iota(r.perm.begin(), r.perm.end(), 0);
  for (const Letter& l : w.letters()) {
    if (l.sym == kSymR) {
      if (l.exp % 2 != 0) r.orient = -r.orient;
      continue;
    }
    if (l.sym == kSymY) continue;
    if (l.exp % 2 == 0) continue;
    // odd power of the transposition (i, i+1), applied after what came before
    for (int& image : r.perm) {
      if (image == l.sym - 1) image = l.sym;
      else if (image == l.sym) image = l.sym - 1;
    }
  }
  return r;
}

PuncturePermOrient compose(const PuncturePermOrient& a, const PuncturePermOrient& b) {
  PuncturePermOrient r;
  r.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = b.perm[a.perm[i]];
  r.orient = a.orient * b.orient;
  return r;
}

bool perm_is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

int perm_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      first = false;
      out << j + 1;
      j = static_cast<std::size_t>(perm[j]);
    }
    out << ')';
  }
  return any ? out.str() : "id";
}

GroupWord project_to_sphere(const GroupWord& w) {
  if (w.alphabet() != Alphabet::hyper_mcg)
    throw std::invalid_argument("project: expected a hyperelliptic word");
  GroupWord r(Alphabet::sphere_ext, w.genus());
  for (const Letter& l : w.letters()) {
    if (l.sym == kSymY) continue;
    r.append(l.sym, l.exp);
  }
  return r;
}

GroupWord lift_to_hyper(const GroupWord& w) {
  GroupWord r(Alphabet::hyper_mcg, w.genus());
  for (const Letter& l : w.letters()) r.append(l.sym, l.exp);
  return r;
}

GroupWord embed_in_sphere(const GroupWord& braid) {
  if (braid.alphabet() != Alphabet::braid)
    throw std::invalid_argument("embed: expected a braid word");
  GroupWord r(Alphabet::sphere_ext, braid.genus());
  for (const Letter& l : braid.letters()) r.append(l.sym, l.exp);
  return r;
}

int y_parity(const GroupWord& w) {
  long n = 0;
  for (const Letter& l : w.letters())
    if (l.sym == kSymY) n += l.exp;
  return static_cast<int>(((n % 2) + 2) % 2);
}

GroupWord tau_word(int genus) {
  GroupWord w(Alphabet::braid, genus);
  for (int i = 1; i <= genus - 1; ++i) w.append(i, 1);
  for (int i = genus - 1; i >= 1; --i) w.append(i, 1);
  return w;
}

GroupWord z_word(int genus) {
  GroupWord w(Alphabet::braid, genus);
  for (int i = 1; i <= genus - 1; ++i) w.append(i, 1);
  return w.pow(genus);
}

}  // namespace mcg
