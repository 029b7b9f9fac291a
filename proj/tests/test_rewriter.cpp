#include <random>

#include "doctest.h"
#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"
#include "hallpath/oracle.hpp"
#include "hallpath/rewriter.hpp"

using namespace hallpath;

namespace {

const RatFunc q = RatFunc::q();
const TruncationPolicy pol{6, 3};

}  // namespace

TEST_CASE("d- d- d+ at level 1") {
  const Word w = parse_word("1_0 d- d- d+ 1_1");
  SpecialRewriter rw;
  const NormalForm nf = rw.to_special(w);
  CHECK(oracle_equal(Expr(w), to_expr(nf, 1), pol));
  NormalTerm a0, a00;
  a0.ys = {{0}};
  a0.tail = SpecialWord{{{LetterKind::Dminus, 0}}, {0}};
  a00.tail = SpecialWord{{{LetterKind::Dminus, 0}, {LetterKind::Phi, 0}}, {0}};
  REQUIRE(nf.size() == 2);
  CHECK(nf.at(a0) == RatFunc(1));
  CHECK(nf.at(a00) == 1 - q);
  CHECK(a0.is_factorizable());
  CHECK(a00.is_special());
}

TEST_CASE("special words are fixed") {
  SpecialRewriter rw;
  const Word w = parse_word("1_0 d- z1 phi d- z1^-1 z2^2 1_2");
  const NormalForm nf = rw.to_special(w);
  REQUIRE(nf.size() == 1);
  CHECK(nf.begin()->first.to_word() == w);
  CHECK(nf.begin()->second == RatFunc(1));
}

TEST_CASE("level 0 loops become Y products") {
  SpecialRewriter rw;
  const Word w = parse_word("d- d- phi d+ d+ 1_0");
  const NormalForm nf = rw.to_special(w);
  CHECK(oracle_equal(Expr(w), to_expr(nf, 0), pol));
  for (const auto& [term, c] : nf) CHECK_FALSE(term.tail);
}

TEST_CASE("minus tower letters are out of scope") {
  SpecialRewriter rw;
  CHECK_THROWS_AS(rw.to_special(parse_word("d+ d- 1_0")), UnsupportedScope);
}

TEST_CASE("random words are rewritten soundly with decreasing measure") {
  std::mt19937_64 rng(7);
  const std::vector<Letter> pool{Letter::dplus(), Letter::dminus(), Letter::phi(), Letter::z(1),
                                 Letter::z(1, -1), Letter::z(2), Letter::T(1), Letter::Tinv(1)};
  SpecialRewriter rw;
  int checked = 0;
  while (checked < 25) {
    const int len = static_cast<int>(rng() % 6) + 1;
    std::vector<Letter> ls;
    int level = 0;
    for (int j = 0; j < len; ++j) {
      const Letter x = pool[rng() % pool.size()];
      ls.push_back(x);
      level -= x.level_change();
    }
    if (level < 0 || level > 2) continue;
    const Word w(ls, level);
    try {
      w.validate();
    } catch (const LevelError&) {
      continue;
    }
    if (w.target() != 0 || w.level_range().first < 0 || w.level_range().second > 3) continue;
    CHECK(oracle_equal(Expr(w), to_expr(rw.to_special(w), w.source), pol));
    ++checked;
  }
  CHECK(rw.stats().measure_violations == 0);
}

TEST_CASE("pushing monomials through T") {
  for (int a = -2; a <= 2; ++a)
    for (const auto& r : push_z_through_Tinv(2, 1, a)) CHECK(oracle_equal(r.lhs, r.rhs, pol));
  const auto p = push_monomial_through_T({2, 0}, 1, true, q);
  CHECK(p.swapped == std::vector<int>{0, 2});
}

TEST_CASE("Hecke normal form") {
  const Expr e(parse_word("T1 T1 1_2"));
  const Expr n = hecke_normalize(e);
  CHECK(n == Expr(parse_word("T1 1_2")) * (1 - q) + Expr::identity(2) * q);
  const Expr braid(parse_word("T2 T1 T2 1_3"));
  CHECK(hecke_normalize(braid) == Expr(parse_word("T1 T2 T1 1_3")));
  const Expr mixed(parse_word("z1 T1^-1 z2^-1 1_2"));
  CHECK(oracle_equal(mixed, hecke_normalize(mixed), pol));
}

TEST_CASE("Theta on e and f") {
  for (int m = -2; m <= 2; ++m) {
    const ThetaImage th = theta(e_word(m));
    CHECK(th.half == 0);
    CHECK(th.expr == Expr(f_word(m)));
    const ThetaImage back = theta(th.expr);
    CHECK(back.half == 0);
    CHECK(back.expr == Expr(e_word(m)));
  }
  CHECK(theta(parse_word("d+ 1_1")).half == 1);
}
