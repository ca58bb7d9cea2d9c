#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgrep/garside.hpp"
#include "mcgrep/lk.hpp"
#include "mcgrep/sampler.hpp"

using namespace mcg;

namespace {

GroupWord random_braid_word(Sampler& s, int genus, long max_len) {
  GroupWord w(Alphabet::braid, genus);
  long len = s.range(0, max_len);
  for (long i = 0; i < len; ++i)
    w.append(static_cast<int>(s.range(1, genus - 1)), s.coin() ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("pair basis indexing") {
  CHECK(pair_count(4) == 6);
  CHECK(pair_count(5) == 10);
  CHECK(pair_index(1, 2, 4) == 0);
  CHECK(pair_index(1, 4, 4) == 2);
  CHECK(pair_index(2, 3, 4) == 3);
  CHECK(pair_index(3, 4, 4) == 5);
  for (int g = 4; g <= 7; ++g)
    for (int idx = 0; idx < pair_count(g); ++idx) {
      auto [i, j] = pair_at(idx, g);
      CHECK(i < j);
      CHECK(pair_index(i, j, g) == idx);
    }
}

TEST_CASE("table construction passes its own relation gate") {
  // the constructor throws on any violated braid relation or inverse product
  LKTable t4 = build_lk_table(4);
  CHECK(t4.gen.size() == 3);
  CHECK(t4.gen[0].rows() == 6);
  LKTable t5 = build_lk_table(5);
  CHECK(t5.gen.size() == 4);
  CHECK(t5.gen[0].rows() == 10);
  CHECK_NOTHROW(build_lk_table(6));
  CHECK_THROWS_AS(build_lk_table(3), std::invalid_argument);
}

TEST_CASE("matrix entries stay in the integral Laurent subring") {
  LKTable t = build_lk_table(5);
  for (const LaurentMat& m : t.gen)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) CHECK(m(i, j).has_integer_coeffs());
  for (const LaurentMat& m : t.gen_inv)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) CHECK(m(i, j).has_integer_coeffs());
}

TEST_CASE("defining relations as evaluated products") {
  LKTable t = build_lk_table(4);
  CHECK(mat_equal(lk_eval(t, GroupWord::parse("s1 s2 s1", Alphabet::braid, 4)),
                  lk_eval(t, GroupWord::parse("s2 s1 s2", Alphabet::braid, 4))));
  CHECK(mat_equal(lk_eval(t, GroupWord::parse("s1 s3", Alphabet::braid, 4)),
                  lk_eval(t, GroupWord::parse("s3 s1", Alphabet::braid, 4))));
  CHECK(is_identity(lk_eval(t, GroupWord(Alphabet::braid, 4))));
  CHECK(is_identity(lk_eval(t, GroupWord::parse("s2 s2^-1", Alphabet::braid, 4))));
}

TEST_CASE("generator determinants are conjugation invariant") {
  LKTable t4 = build_lk_table(4);
  LaurentPoly expect4 = LaurentPoly::monomial(4, 1);  // t q^2 (-q)^{g-2} at g=4
  for (const LaurentMat& m : t4.gen) CHECK(det(m) == expect4);
  LKTable t5 = build_lk_table(5);
  LaurentPoly expect5 = -LaurentPoly::monomial(5, 1);
  for (const LaurentMat& m : t5.gen) CHECK(det(m) == expect5);
}

TEST_CASE("evaluation is a homomorphism") {
  LKTable t = build_lk_table(4);
  Sampler s(606);
  for (int trial = 0; trial < 40; ++trial) {
    GroupWord a = random_braid_word(s, 4, 6), b = random_braid_word(s, 4, 6);
    CHECK(mat_equal(lk_eval(t, compose(a, b)), LaurentMat(lk_eval(t, a) * lk_eval(t, b))));
  }
}

TEST_CASE("specialization commutes with evaluation") {
  LKTable t = build_lk_table(4);
  Sampler s(707);
  const Rational q0(2), t0(3);
  for (int trial = 0; trial < 40; ++trial) {
    GroupWord w = random_braid_word(s, 4, 8);
    RatMat direct = identity<Rational>(pair_count(4));
    for (const Letter& l : w.letters()) {
      const RatMat& m = l.exp > 0 ? t.screen_gen[static_cast<std::size_t>(l.sym - 1)]
                                  : t.screen_gen_inv[static_cast<std::size_t>(l.sym - 1)];
      for (long r = 0; r < (l.exp > 0 ? l.exp : -l.exp); ++r) direct = direct * m;
    }
    CHECK(mat_equal(specialize_matrix(lk_eval(t, w), q0, t0), direct));
  }
}

TEST_CASE("identity decision agrees with the word problem oracle") {
  LKTable t = build_lk_table(4);
  CHECK_FALSE(lk_is_identity(t, GroupWord::parse("s1", Alphabet::braid, 4)));
  CHECK(lk_is_identity(t, GroupWord::parse("s1 s2 s1 s2^-1 s1^-1 s2^-1", Alphabet::braid, 4)));
  CHECK(lk_is_identity(t, GroupWord::parse("s1 s3 s1^-1 s3^-1", Alphabet::braid, 4)));
  Sampler s(909);
  for (int trial = 0; trial < 150; ++trial) {
    GroupWord w = random_braid_word(s, 4, 14);
    if (s.coin()) w = compose(w, w.inverse());
    CHECK(lk_is_identity(t, w) == is_trivial_braid(w));
  }
}
