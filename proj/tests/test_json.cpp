#include "doctest.h"
#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"
#include "hallpath/json_io.hpp"

using namespace hallpath;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

template <class T, class F>
void round_trip(const T& x, F from) {
  const json j = to_json(x);
  CHECK(from(json::parse(j.dump())) == x);
}

}  // namespace

TEST_CASE("scalars") {
  round_trip((1 - q * t) / (t - q.pow(2)) * RatFunc(mpq_class(-3, 4)), ratfunc_from_json);
  round_trip(RatFunc(0), ratfunc_from_json);
  round_trip(mpq_class(-22, 7), rational_from_json);
  CHECK(ratfunc_from_json(json("5/2")) == RatFunc(mpq_class(5, 2)));
  CHECK(ratfunc_from_json(json(3)) == RatFunc(3));
  CHECK_THROWS_AS(rational_from_json(json("1/0")), InvalidInput);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), InvalidInput);
  CHECK_THROWS_AS(ratfunc_from_json(json::parse(R"({"num": [[0,0,"1"]], "den": []})")), InvalidInput);
}

TEST_CASE("states") {
  const State s = State::make(Side::Plus, Partition({2, 1}), {BoxPos{2, 2}, BoxPos{1, 3}});
  const json j = to_json(s);
  CHECK(j.dump() == R"({"side":"+","lambda":[2,1],"w":[[1,3],[2,2]]})");
  round_trip(s, state_from_json);
  const State m = State::make(Side::Minus, Partition({3, 1}), {BoxPos{1, 2}, BoxPos{1, 3}});
  round_trip(m, state_from_json);
  CHECK(state_from_json(json::parse(R"({"lambda":[1]})")) == State::level0(Partition({1})));
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"lambda":[1],"w":[[4,4]]})")), InvalidInput);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"side":"0","lambda":[1]})")), InvalidInput);
  CHECK_THROWS_AS(state_from_json(json::parse(R"({"lambda":[1,2]})")), InvalidInput);
}

TEST_CASE("vectors and expressions") {
  PolyRep<ExactField> rep;
  const auto v = rep.act(e_word(1), Vect<RatFunc>(State::level0(Partition({2, 1}))));
  round_trip(v, vect_from_json);
  PolyRep<PointField> pt;
  const auto pv = pt.act(e_word(1), Vect<mpq_class>(State::level0(Partition({2}))));
  round_trip(pv, point_vect_from_json);
  const Expr e = Expr(e_word(1)) * q - Expr(f_word(-1)) * (1 - t);
  round_trip(e, expr_from_json);
  CHECK_THROWS_AS(expr_from_json(json::parse(R"({"source":0,"target":0,"terms":[{"word":"d+ 1_0","coeff":"1"}]})")),
                  LevelError);
}

TEST_CASE("normal forms") {
  SpecialRewriter rw;
  const NormalForm nf = rw.to_special(parse_word("1_0 d- d- z2 d+ 1_1"));
  const json j = to_json(nf, 1);
  CHECK(normal_form_from_json(json::parse(j.dump())) == nf);
  CHECK(j.at("expr").at("source") == 1);
}

TEST_CASE("reports") {
  RelationReport r;
  r.id = "cubic_e";
  r.family = "EHA";
  r.params = "";
  r.status = Status::Fail;
  r.domain_size = 12;
  r.witness = "I_{(1)}";
  r.lhs = "0";
  r.rhs = "1";
  r.note = "n";
  const RelationReport back = report_from_json(json::parse(to_json(r).dump()));
  CHECK(to_json(back) == to_json(r));
  CheckConfig cfg;
  const json f = report_file(cfg, "exact", {r});
  CHECK(f.at("summary").at("failed") == 1);
  CHECK(f.at("config").at("degree_cap") == 6);
  CHECK_FALSE(f.contains("threads"));
}
