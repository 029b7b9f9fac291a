#include <map>
#include <string>

#include "doctest.h"
#include "hallpath/errors.hpp"
#include "hallpath/polyrep.hpp"

using namespace hallpath;

namespace {

const mpq_class Q0(2, 3), T0(5, 7);
const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
State I0(std::vector<int> v) { return State::level0(P(std::move(v))); }

using Table = std::map<std::string, std::string>;

Table point_table(const Vect<mpq_class>& v) {
  Table out;
  for (const auto& [s, x] : v) out[s.to_string()] = x.get_str();
  return out;
}

Vect<mpq_class> run(const Word& w, const State& s) {
  PolyRep<PointField> rep(PointField{Q0, T0}, TruncationPolicy{8, 3});
  return rep.act(w, Vect<mpq_class>(s));
}

}  // namespace

TEST_CASE("z and Delta are diagonal with contents") {
  PolyRep<ExactField> rep;
  const State s = State::make(Side::Plus, Partition(), {BoxPos{1, 2}, BoxPos{1, 1}});
  CHECK(rep.act(Letter::z(1), s) == Vect<RatFunc>(s, q));
  CHECK(rep.act(Letter::z(2), s) == Vect<RatFunc>(s, RatFunc(1)));
  CHECK_THROWS(rep.act(Letter::z(3), s));
  CHECK(rep.act(Letter::delta(1), I0({2, 1})) == Vect<RatFunc>(I0({2, 1}), 1 + q + t));
  CHECK(rep.act(Letter::delta_star(1), I0({2, 1})) == Vect<RatFunc>(I0({2, 1}), 1 + q.inv() + t.inv()));
  const State m = State::make(Side::Minus, P({1}), {BoxPos{1, 1}});
  CHECK(rep.act(Letter::delta(2), m).is_zero());
}

TEST_CASE("level changes at the boundary") {
  PolyRep<ExactField> rep;
  CHECK(rep.act(Letter::dplus(), I0({})) == Vect<RatFunc>(State::make(Side::Plus, Partition(), {BoxPos{1, 1}})));
  CHECK(rep.act(Letter::dminus(), State::make(Side::Plus, Partition(), {BoxPos{1, 1}})) == Vect<RatFunc>(I0({1})));
  CHECK(rep.act(Letter::dminus(), I0({})).is_zero());
  CHECK(rep.act(Letter::dminus(), I0({1})) ==
        Vect<RatFunc>(State::make(Side::Minus, P({1}), {BoxPos{1, 1}}), RatFunc(-1)));
  CHECK(rep.act(Letter::dplus(), State::make(Side::Minus, P({1}), {BoxPos{1, 1}})) == Vect<RatFunc>(I0({})));
}

TEST_CASE("d+ on I_(1) in closed form") {
  PolyRep<ExactField> rep;
  const auto v = rep.act(Letter::dplus(), I0({1}));
  REQUIRE(v.size() == 2);
  CHECK(v.coeff(State::make(Side::Plus, P({1}), {BoxPos{1, 2}})) == -q * (t - 1) / (q - t));
  CHECK(v.coeff(State::make(Side::Plus, P({1}), {BoxPos{2, 1}})) == t * (q - 1) / (q - t));
}

TEST_CASE("T1 fixes d+^2 I_empty") {
  PolyRep<ExactField> rep;
  const State s = State::make(Side::Plus, Partition(), {BoxPos{1, 2}, BoxPos{1, 1}});
  CHECK(rep.act(Letter::T(1), s) == Vect<RatFunc>(s));
}

TEST_CASE("actions match the independent model at q=2/3, t=5/7") {
  CHECK(point_table(run(parse_word("d+", 0), I0({1}))) ==
        Table{{"I_{(1),((1,2))}", "-4"}, {"I_{(1),((2,1))}", "5"}});
  const Table dd{{"I_{(1),((1,2),(1,3))}", "-16/51"},
                 {"I_{(1),((1,2),(2,1))}", "-40/17"},
                 {"I_{(1),((2,1),(1,2))}", "10/3"}};
  CHECK(point_table(run(parse_word("d+ d+", 0), I0({1}))) == dd);
  CHECK(point_table(run(parse_word("T1 d+ d+", 0), I0({1}))) == dd);
  CHECK(point_table(run(parse_word("d- z1 d+", 0), I0({2, 1}))) ==
        Table{{"I_{(2,1,1)}", "10625/1421"}, {"I_{(2,2)}", "-200/21"}, {"I_{(3,1)}", "736/261"}});
  CHECK(point_table(run(parse_word("d- z1 d+ d+", 0), I0({1}))) ==
        Table{{"I_{(1,1),((1,2))}", "20/9"}, {"I_{(2),((1,3))}", "-64/459"}, {"I_{(2),((2,1))}", "-200/119"}});
}

TEST_CASE("minus tower matches the independent model at q=2/3, t=5/7") {
  CHECK(point_table(run(parse_word("d-", 0), I0({2, 1}))) ==
        Table{{"I-_{(2,1),((1,2))}", "-17/2"}, {"I-_{(2,1),((2,1))}", "23/5"}});
  const Table dd{{"I-_{(3,1),((1,3),(1,2))}", "-395/32"},
                 {"I-_{(3,1),((1,3),(2,1))}", "2291/136"},
                 {"I-_{(3,1),((2,1),(1,3))}", "87/68"}};
  CHECK(point_table(run(parse_word("d- d-", 0), I0({3, 1}))) == dd);
  CHECK(point_table(run(parse_word("T1 d- d-", 0), I0({3, 1}))) == dd);
  CHECK(point_table(run(parse_word("d+ z1^-1 d-", 0), I0({2, 1}))) ==
        Table{{"I_{(1,1)}", "-51/4"}, {"I_{(2)}", "161/25"}});
}

TEST_CASE("Hecke quadratic and inverse on level 3") {
  PolyRep<ExactField> rep(ExactField{}, TruncationPolicy{6, 3});
  for (const auto& s : enumerate_states(3, 5)) {
    const Vect<RatFunc> v(s);
    for (int i = 1; i <= 2; ++i) {
      const auto tv = rep.act(Letter::T(i), v);
      CHECK(rep.act(Letter::Tinv(i), tv) == v);
      CHECK(rep.act(Letter::T(i), tv) == tv * (1 - q) + v * q);
    }
  }
  for (const auto& s : enumerate_states(-2, 4)) {
    const auto tv = rep.act(Letter::T(1), Vect<RatFunc>(s));
    CHECK(rep.act(Letter::T(1), tv) == tv * (1 - q.inv()) + Vect<RatFunc>(s, q.inv()));
  }
}

TEST_CASE("state enumeration") {
  CHECK(enumerate_states(0, 1).size() == 2);
  CHECK(enumerate_states(1, 1) == std::vector<State>{State::make(Side::Plus, Partition(), {BoxPos{1, 1}})});
  // (1,1) on the empty diagram, then (1) with (1,2) or (2,1)
  CHECK(enumerate_states(1, 2).size() == 3);
  for (int k = -3; k <= 3; ++k)
    for (const auto& s : enumerate_states(k, 5)) {
      CHECK(is_valid_state(s));
      CHECK(s.level() == k);
      CHECK(s.total_boxes() <= 5);
    }
  CHECK_FALSE(is_valid_state(State::make(Side::Plus, P({1}), {BoxPos{3, 1}})));
}

TEST_CASE("truncation overflow is reported") {
  PolyRep<ExactField> rep(ExactField{}, TruncationPolicy{2, 3});
  CHECK_THROWS_AS(rep.act(Letter::dplus(), I0({2})), TruncationOverflow);
  CHECK_NOTHROW(rep.act(Letter::dplus(), I0({1})));
}

TEST_CASE("exact and point evaluation agree") {
  PolyRep<ExactField> ex;
  PolyRep<PointField> pt(PointField{Q0, T0});
  const Word w = parse_word("d- T1 z2 d+ d+ 1_0");
  for (const auto& s : enumerate_states(0, 4)) {
    const auto a = ex.act(w, Vect<RatFunc>(s));
    const auto b = pt.act(w, Vect<mpq_class>(s));
    Vect<mpq_class> ea;
    for (const auto& [st, x] : a) ea.add(st, x.eval(Q0, T0));
    CHECK(ea == b);
  }
}
