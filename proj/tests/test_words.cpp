#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "mcgrep/sampler.hpp"
#include "mcgrep/words.hpp"

using namespace mcg;

namespace {

GroupWord random_braid_word(Sampler& s, int genus, long max_len) {
  GroupWord w(Alphabet::braid, genus);
  long len = s.range(0, max_len);
  for (long i = 0; i < len; ++i)
    w.append(static_cast<int>(s.range(1, genus - 1)), s.coin() ? 1 : -1);
  return w;
}

GroupWord random_hyper_word(Sampler& s, int genus, long max_len) {
  GroupWord w(Alphabet::hyper_mcg, genus);
  long len = s.range(0, max_len);
  for (long i = 0; i < len; ++i) {
    long pick = s.range(0, genus);
    int sym = pick == 0 ? kSymR : pick == 1 ? kSymY : static_cast<int>(pick - 1);
    w.append(sym, s.coin() ? 1 : -1);
  }
  return w;
}

}  // namespace

TEST_CASE("parsing the documented grammar") {
  GroupWord w = parse_word("s1 s2 s1^-1", Alphabet::braid, 4);
  CHECK(w.letters().size() == 3);
  CHECK(parse_word("s1 s1^-1", Alphabet::braid, 4).empty());
  CHECK(parse_word("T3 Y R", Alphabet::hyper_mcg, 4).letters().size() == 3);
  GroupWord p = parse_word("(s1 s2 s3)^4", Alphabet::braid, 4);
  CHECK(p.exponent_sum() == 12);
  CHECK(p.length() == 12);
  CHECK(p == z_word(4));
  CHECK(parse_word("(T1 (T2 T3)^-1)^2", Alphabet::hyper_mcg, 4).length() == 6);
  CHECK(parse_word("s2^0", Alphabet::braid, 4).empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_word("s5", Alphabet::braid, 4), doctest::Contains("position"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_word("Y", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("R", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s1^", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("(s1 s2", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s1)", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x1", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s", Alphabet::braid, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("T1", Alphabet::hyper_mcg, 3), std::invalid_argument);
  CHECK_NOTHROW(GroupWord::parse("s1 s2", Alphabet::braid, 3));
}

TEST_CASE("printing then parsing is the identity") {
  Sampler s(2024);
  for (int trial = 0; trial < 200; ++trial) {
    GroupWord w = random_hyper_word(s, 5, 12);
    CHECK(GroupWord::parse(w.str(), Alphabet::hyper_mcg, 5) == w);
  }
  CHECK(GroupWord(Alphabet::braid, 4).str() == "1");
  // the empty word prints as "1", which parses back to the empty word
  CHECK(GroupWord::parse("1", Alphabet::braid, 4).empty());
}

TEST_CASE("composition and inverses reduce freely") {
  GroupWord s1 = parse_word("s1", Alphabet::braid, 4);
  CHECK(compose(s1, s1.inverse()).empty());
  CHECK(compose(parse_word("s1 s2", Alphabet::braid, 4),
                parse_word("s2^-1", Alphabet::braid, 4)) == s1);
  GroupWord e(Alphabet::braid, 4);
  GroupWord w = parse_word("s3 s1^2", Alphabet::braid, 4);
  CHECK(compose(e, w) == w);
  CHECK(compose(w, w.inverse()).empty());
  CHECK(w.pow(-2) == w.inverse().pow(2));
  CHECK_THROWS_AS(compose(w, parse_word("s1", Alphabet::braid, 5)), std::invalid_argument);
}

TEST_CASE("free reduction is confluent") {
  Sampler s(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int genus = 4 + static_cast<int>(s.range(0, 2));
    std::vector<Letter> raw;
    long len = s.range(0, 30);
    for (long i = 0; i < len; ++i)
      raw.push_back({static_cast<int>(s.range(1, genus - 1)), s.coin() ? 1L : -1L});

    GroupWord sequential(Alphabet::braid, genus);
    for (const Letter& l : raw) sequential.append(l.sym, l.exp);

    // reduce via a random balanced splitting instead
    auto split_reduce = [&](auto&& self, std::size_t lo, std::size_t hi) -> GroupWord {
      GroupWord r(Alphabet::braid, genus);
      if (lo >= hi) return r;
      if (hi - lo == 1) {
        r.append(raw[lo].sym, raw[lo].exp);
        return r;
      }
      std::size_t mid = lo + 1 + static_cast<std::size_t>(s.below(hi - lo - 1));
      return compose(self(self, lo, mid), self(self, mid, hi));
    };
    CHECK(split_reduce(split_reduce, 0, raw.size()) == sequential);
  }
}

TEST_CASE("exponent sum is a homomorphism") {
  CHECK(parse_word("s1 s2 s3 s3 s2 s1", Alphabet::braid, 4).exponent_sum() == 6);
  CHECK(parse_word("s1 s1^-1", Alphabet::braid, 4).exponent_sum() == 0);
  Sampler s(5150);
  for (int trial = 0; trial < 200; ++trial) {
    GroupWord a = random_braid_word(s, 5, 15), b = random_braid_word(s, 5, 15);
    CHECK(compose(a, b).exponent_sum() == a.exponent_sum() + b.exponent_sum());
  }
}

TEST_CASE("puncture action and orientation") {
  GroupWord s1 = parse_word("s1", Alphabet::sphere_ext, 4);
  PuncturePermOrient p = perm_orient(s1);
  CHECK(cycle_notation(p.perm) == "(1 2)");
  CHECK(p.orient == 1);

  PuncturePermOrient rr = perm_orient(parse_word("R R", Alphabet::sphere_ext, 4));
  CHECK(perm_is_identity(rr.perm));
  CHECK(rr.orient == 1);
  CHECK(perm_orient(parse_word("R", Alphabet::sphere_ext, 4)).orient == -1);

  // independent route: compose the three letters' images by hand
  GroupWord t1 = parse_word("T1", Alphabet::hyper_mcg, 4);
  GroupWord t2 = parse_word("T2", Alphabet::hyper_mcg, 4);
  PuncturePermOrient expected = compose(compose(perm_orient(t1), perm_orient(t2)), perm_orient(t1));
  PuncturePermOrient got = perm_orient(parse_word("T1 T2 T1", Alphabet::hyper_mcg, 4));
  CHECK(got.perm == expected.perm);
  CHECK(cycle_notation(got.perm) == "(1 3)");
  CHECK(got.orient == 1);

  CHECK(perm_sign(got.perm) == -1);
  CHECK(perm_sign(rr.perm) == 1);

  Sampler s(31337);
  for (int trial = 0; trial < 300; ++trial) {
    GroupWord a = random_hyper_word(s, 5, 12), b = random_hyper_word(s, 5, 12);
    PuncturePermOrient lhs = perm_orient(compose(a, b));
    PuncturePermOrient rhs = compose(perm_orient(a), perm_orient(b));
    CHECK(lhs.perm == rhs.perm);
    CHECK(lhs.orient == rhs.orient);
    CHECK(perm_sign(lhs.perm) == perm_sign(perm_orient(a).perm) * perm_sign(perm_orient(b).perm));
  }
}

TEST_CASE("projection to the sphere kills exactly Y") {
  CHECK(project_to_sphere(parse_word("Y", Alphabet::hyper_mcg, 4)).empty());
  CHECK(project_to_sphere(parse_word("T1 Y T2", Alphabet::hyper_mcg, 4)) ==
        parse_word("s1 s2", Alphabet::sphere_ext, 4));
  CHECK(project_to_sphere(parse_word("R T1^-1", Alphabet::hyper_mcg, 4)) ==
        parse_word("R s1^-1", Alphabet::sphere_ext, 4));

  Sampler s(99);
  for (int trial = 0; trial < 300; ++trial) {
    GroupWord a = random_hyper_word(s, 5, 12), b = random_hyper_word(s, 5, 12);
    CHECK(project_to_sphere(compose(a, b)) ==
          compose(project_to_sphere(a), project_to_sphere(b)));
  }
}

TEST_CASE("lifting and embedding round trips") {
  GroupWord b = parse_word("s1 s3^-2", Alphabet::braid, 4);
  GroupWord lifted = lift_to_hyper(b);
  CHECK(lifted.alphabet() == Alphabet::hyper_mcg);
  CHECK(project_to_sphere(lifted) == embed_in_sphere(b));
  CHECK(y_parity(parse_word("T1 Y T2 Y^3", Alphabet::hyper_mcg, 4)) == 0);
  CHECK(y_parity(parse_word("Y^-1", Alphabet::hyper_mcg, 4)) == 1);
  CHECK(y_parity(lifted) == 0);
}

TEST_CASE("kernel words have the stated shape") {
  for (int g = 4; g <= 8; ++g) {
    GroupWord tau = tau_word(g), z = z_word(g);
    CHECK(tau.exponent_sum() == 2 * (g - 1));
    CHECK(z.exponent_sum() == g * (g - 1));
    CHECK(perm_is_identity(perm_orient(embed_in_sphere(tau)).perm));
    CHECK(perm_is_identity(perm_orient(embed_in_sphere(z)).perm));
  }
  CHECK(tau_word(4) == parse_word("s1 s2 s3 s3 s2 s1", Alphabet::braid, 4));
}
