#include <random>

#include "doctest.h"
#include "hallpath/detail/zpoly.hpp"
#include "hallpath/errors.hpp"
#include "hallpath/ratfunc.hpp"

using namespace hallpath;

namespace {

const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

RatFunc random_ratfunc(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), n(1, 3);
  auto poly = [&] {
    LaurentPoly p;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(e(rng), e(rng), c(rng));
    return p;
  };
  LaurentPoly d;
  while (d.is_zero()) d = poly();
  return RatFunc(poly(), d);
}

}  // namespace

TEST_CASE("canonical form of simple quotients") {
  CHECK(((1 - q * q) / (1 - q)).to_string() == "1 + q");
  CHECK(((1 - q * t) / (1 - t)).to_string() == "(1 - q*t)/(1 - t)");
  CHECK((1 / (q - t)).to_string() == "-1/(t - q)");
  CHECK((q.inv() * t.pow(-2)).to_string() == "q^-1*t^-2");
  CHECK((RatFunc(2) / (2 - 4 * q)).to_string() == "1/(1 - 2*q)");
  CHECK(((q - t) / (t - q)) == RatFunc(-1));
}

TEST_CASE("zero numerator and zero division") {
  CHECK((q - q).is_zero());
  CHECK((q - q).to_string() == "0");
  CHECK_THROWS_AS(q / (t - t), DivisionByZero);
}

TEST_CASE("evaluation and poles") {
  RatFunc f = (1 - q * t) / (1 - t);
  CHECK(f.eval(2, 3) == mpq_class(5, 2));
  CHECK_THROWS_AS(f.eval(2, 1), PoleError);
  CHECK((q.pow(-2)).eval(mpq_class(1, 2), 7) == 4);
}

TEST_CASE("gcd cancels shared binomial factors") {
  RatFunc a = (1 - q * q * t * t) / ((1 - q * t) * (1 + t));
  CHECK(a == (1 + q * t) / (1 + t));
  RatFunc b = ((1 - q.pow(3)) * (1 - t.pow(2))) / ((1 - q) * (1 - t) * (1 + q + q * q));
  CHECK(b == 1 + t);
}

TEST_CASE("heuristic gcd agrees with the subresultant fallback") {
  using namespace hallpath::detail;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-4, 4), d(0, 3);
  auto rnd = [&] {
    ZPoly2 p(d(rng) + 1, ZPoly1(d(rng) + 1));
    for (auto& r : p)
      for (auto& x : r) x = c(rng);
    trim(p);
    return p;
  };
  for (int i = 0; i < 60; ++i) {
    ZPoly2 g = rnd(), a = rnd(), b = rnd();
    if (g.empty() || a.empty() || b.empty()) continue;
    ZPoly2 x = mul(g, a), y = mul(g, b);
    ZPoly2 h1 = gcd(x, y), h2 = gcd_prs(x, y);
    ZPoly2 tmp;
    CHECK(div_exact(h1, h2, tmp));
    CHECK(div_exact(h2, h1, tmp));
    CHECK(div_exact(h1, g, tmp) == true);
  }
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFunc());
    if (!a.is_zero()) CHECK(a * a.inv() == RatFunc(1));
  }
}

TEST_CASE("arithmetic matches pointwise rational arithmetic") {
  std::mt19937 rng(5);
  const mpq_class q0(3, 7), t0(-5, 2);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    mpq_class av, bv;
    try {
      av = a.eval(q0, t0);
      bv = b.eval(q0, t0);
    } catch (const PoleError&) {
      continue;
    }
    CHECK((a + b).eval(q0, t0) == av + bv);
    CHECK((a * b).eval(q0, t0) == av * bv);
    if (bv != 0) CHECK((a / b).eval(q0, t0) == av / bv);
  }
}

TEST_CASE("half powers of q fold into the value") {
  HalfQScalar h(q, 1);
  CHECK(h.has_half());
  CHECK_THROWS_AS(h.to_ratfunc(), InvalidInput);
  HalfQScalar sq = h * h;
  CHECK(!sq.has_half());
  CHECK(sq.to_ratfunc() == q.pow(3));
  CHECK(HalfQScalar(RatFunc(1), -2).to_ratfunc() == q.inv());
}
