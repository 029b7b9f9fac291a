#include "doctest.h"
#include "hallpath/coefficients.hpp"
#include "hallpath/errors.hpp"

using namespace hallpath;

namespace {

const mpq_class Q0(2, 3), T0(5, 7);
const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("addable and removable boxes") {
  auto add = addable_boxes(P({2, 1}));
  REQUIRE(add.size() == 3);
  CHECK(add[0] == BoxPos{1, 3});
  CHECK(add[1] == BoxPos{2, 2});
  CHECK(add[2] == BoxPos{3, 1});
  auto rem = removable_boxes(P({3, 1, 1}));
  REQUIRE(rem.size() == 2);
  CHECK(rem[0] == BoxPos{1, 3});
  CHECK(rem[1] == BoxPos{3, 1});
  CHECK(addable_boxes(Partition()).size() == 1);
  CHECK(removable_boxes(Partition()).empty());
  CHECK_THROWS_AS(P({1, 2}), InvalidInput);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_up_to(6).size() == 30);
}

TEST_CASE("lambda genus of small charges") {
  QTCharge phi{{{1, 0}, 1}, {{0, 1}, -1}};
  CHECK(lambda_genus(phi) == (1 - q) / (1 - t));
  CHECK(lambda_genus({{{0, 0}, 1}}).is_zero());
  CHECK_THROWS_AS(lambda_genus({{{0, 0}, -1}}), PoleError);
}

TEST_CASE("closed values of c, c* and d") {
  CHECK(c_coeff(Partition(), {1, 1}) == RatFunc(-1));
  CHECK(cstar_coeff(P({1}), {1, 1}) == RatFunc(1));
  CHECK(d_lambda(P({1})) == (1 - q * t) / ((1 - q) * (1 - t)));
  CHECK(cstar_coeff(P({2}), {1, 2}) == q.inv() * (1 + q));
  CHECK(cstar_lambda_form(P({2}), {1, 2}) == q.inv() * (1 + q) * (1 - q * t) / (1 - q * q * t));
}

TEST_CASE("coefficients match the sympy oracle at q=2/3, t=5/7") {
  struct Case {
    std::vector<int> lam;
    BoxPos x;
    mpq_class v;
  };
  const Case cs[] = {
      {{}, {1, 1}, -1},
      {{1}, {1, 2}, 4},
      {{1}, {2, 1}, -5},
      {{2, 1}, {1, 3}, mpq_class(-184, 29)},
      {{2, 1}, {2, 2}, 20},
      {{2, 1}, {3, 1}, mpq_class(-425, 29)},
      {{3, 1, 1}, {2, 2}, mpq_class(-1200, 391)},
  };
  for (const auto& c : cs) {
    CAPTURE(c.x.to_string());
    CHECK(c_coeff(P(c.lam), c.x).eval(Q0, T0) == c.v);
  }
  const Case cstars[] = {
      {{1}, {1, 1}, 1},
      {{2}, {1, 2}, mpq_class(165, 86)},
      {{2, 1}, {1, 2}, mpq_class(561, 86)},
      {{2, 1}, {2, 1}, mpq_class(-1771, 485)},
      {{3, 2}, {2, 2}, mpq_class(-483, 62)},
      {{3, 1, 1}, {3, 1}, mpq_class(-84084, 29725)},
  };
  for (const auto& c : cstars) {
    CAPTURE(c.x.to_string());
    CHECK(cstar_lambda_form(P(c.lam), c.x).eval(Q0, T0) == c.v);
  }
  // c* fixed by c(lambda;x) c*(mu;x) = (1-q^-1t^-1)^-1 Res_{z=x} psi_lambda(z) / x
  const Case residues[] = {
      {{1}, {1, 1}, 1},
      {{2}, {1, 2}, mpq_class(5, 2)},
      {{2, 1}, {1, 2}, mpq_class(17, 2)},
      {{2, 1}, {2, 1}, mpq_class(-23, 5)},
      {{3, 2}, {2, 2}, mpq_class(-23, 2)},
      {{3, 1, 1}, {3, 1}, mpq_class(-2964, 725)},
  };
  for (const auto& c : residues) {
    CAPTURE(c.x.to_string());
    CHECK(cstar_coeff(P(c.lam), c.x).eval(Q0, T0) == c.v);
  }
  CHECK(d_lambda(P({1})).eval(Q0, T0) == mpq_class(11, 2));
  CHECK(d_lambda(P({2})).eval(Q0, T0) == mpq_class(-946, 15));
  CHECK(d_lambda(P({1, 1})).eval(Q0, T0) == mpq_class(26675, 336));
  CHECK(d_lambda(P({2, 1})).eval(Q0, T0) == mpq_class(1147025, 8211));
  CHECK(d_lambda(P({3, 1})).eval(Q0, T0) == mpq_class(546901520, 432999));
  CHECK(d_lambda(P({2, 2})).eval(Q0, T0) == mpq_class(-1955677625, 517293));
}

TEST_CASE("c forms agree and c* forms differ by (1-qt)/(1-qt x) up to size 6") {
  for (const auto& lam : partitions_up_to(6)) {
    for (const auto& x : addable_boxes(lam)) CHECK(c_lambda_form(lam, x) == c_product_form(lam, x));
    for (const auto& x : removable_boxes(lam))
      CHECK(cstar_lambda_form(lam, x) == cstar_product_form(lam, x) * (1 - q * t) / (1 - q * t * content_of(x)));
  }
}

TEST_CASE("monodromy of the example pair") {
  auto m = monodromy(P({1}), {1, 2}, {2, 1});
  CHECK(m.holds());
  auto d = dual_monodromy(P({2, 1}), {1, 2}, {2, 1});
  CHECK(d.holds());
  CHECK_THROWS_AS(monodromy(P({1}), {1, 2}, {1, 2}), InvalidInput);
  CHECK_THROWS_AS(c_coeff(P({1}), {2, 2}), InvalidInput);
}

TEST_CASE("coefficient ratio law for small partitions") {
  for (const auto& lam : partitions_up_to(4))
    for (const auto& x : addable_boxes(lam)) {
      const Partition mu = lam.add(x);
      const RatFunc law = -((1 - q) * (1 - t) * d_lambda(mu)) / ((1 - q * t) * d_lambda(lam));
      CHECK(c_coeff(lam, x) / cstar_lambda_form(mu, x) == law);
      CHECK(coefficient_ratio(lam, x).lhs == law * (1 - q * t) / (1 - q * t * content_of(x)));
      CHECK(coefficient_ratio(lam, x).holds() == (x == BoxPos{1, 1}));
    }
}
