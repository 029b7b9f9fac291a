#include "doctest.h"
#include "hallpath/errors.hpp"
#include "hallpath/word.hpp"

using namespace hallpath;

TEST_CASE("surface syntax round trip") {
  const Word w = parse_word("1_0 d- z1^2 phi z1^-1 d+ 1_0");
  CHECK(w.source == 0);
  CHECK(w.target() == 0);
  REQUIRE(w.letters.size() == 5);
  CHECK(w.letters[1] == Letter::z(1, 2));
  CHECK(w.letters[2] == Letter::phi());
  CHECK(w.to_string() == "1_0 d- z1^2 phi z1^-1 d+ 1_0");
  CHECK(parse_word(w.to_string()) == w);
  CHECK(parse_word("T2^-1 T1 z3", 3).to_string() == "1_3 T2^-1 T1 z3 1_3");
  CHECK(parse_word("Delta[2] DeltaStar[1] 1_-1").letters.size() == 2);
}

TEST_CASE("levels, margins and validation") {
  const Word w = parse_word("d- d- z2 d+ d+ 1_0");
  CHECK(w.source_levels() == std::vector<int>{1, 2, 2, 1, 0});
  CHECK(w.margin() == 2);
  CHECK(w.level_range() == std::pair<int, int>{0, 2});
  CHECK_NOTHROW(w.validate());
  CHECK_THROWS_AS(parse_word("z2 d+ 1_0").validate(), LevelError);
  CHECK_THROWS_AS(parse_word("T1 d+ 1_0").validate(), LevelError);
  // phi detours one level up and one level down
  CHECK(parse_word("phi 1_1").level_range() == std::pair<int, int>{0, 2});
  CHECK(parse_word("phi 1_1").margin() == 1);
  CHECK(parse_word("d- d- 1_0").margin() == 0);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_word("1_0 d+ x 1_0");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);
  }
  CHECK_THROWS_AS(parse_word("d+ d-"), ParseError);
  CHECK_THROWS_AS(parse_word("1_1 d+ 1_-1"), ParseError);
  CHECK_THROWS_AS(parse_word("z1^a 1_1"), ParseError);
}

TEST_CASE("composition and expressions") {
  const Word a = parse_word("d- 1_1"), b = parse_word("z1 d+ 1_0");
  CHECK(compose(a, b) == parse_word("d- z1 d+ 1_0"));
  CHECK_THROWS_AS(compose(b, b), LevelError);

  const RatFunc q = RatFunc::q();
  Expr e = Expr(parse_word("d- d+ 1_0")) * q - Expr(parse_word("d- d+ 1_0")) * q;
  CHECK(e.is_zero());
  const Expr c = commutator(Expr(parse_word("z1 1_1")), Expr(parse_word("phi 1_1")));
  CHECK(c.terms().size() == 2);
  CHECK(c.margin() == 1);
  CHECK_THROWS_AS(Expr(parse_word("d+ 1_0")) + Expr(parse_word("d- 1_1")), LevelError);
  CHECK(Expr::identity(2) * Expr(parse_word("d+ 1_1")) == Expr(parse_word("d+ 1_1")));
}
