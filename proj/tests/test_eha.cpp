#include "doctest.h"
#include "hallpath/eha.hpp"
#include "hallpath/errors.hpp"

using namespace hallpath;

namespace {

const mpq_class Q0(2, 3), T0(5, 7);
const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
State I0(std::vector<int> v) { return State::level0(P(std::move(v))); }

std::vector<std::string> at_point(const Series& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(c.eval(Q0, T0).get_str());
  return out;
}

}  // namespace

TEST_CASE("named words") {
  CHECK(e_word(2).to_string() == "1_0 d- z1^2 d+ 1_0");
  CHECK(f_word(-1).to_string() == "1_0 d+ z1^-1 d- 1_0");
  CHECK(a_word({1, 0}).to_string() == "1_0 d- z1 phi 1_1");
  CHECK(y_word({0}).to_string() == "1_0 d- d+ 1_0");
  CHECK(z_monomial({1, 0, -2}, 3).to_string() == "1_3 z1 z3^-2 1_3");
  const Expr phi = phi_expr(1);
  CHECK(phi.terms().size() == 2);
  CHECK(phi.terms().at(parse_word("d+ d- 1_1")) == (q - 1).inv());
}

TEST_CASE("global signs of e and f") {
  const SignConstants s = discover_signs();
  CHECK(s.s == 1);
  CHECK(s.s_prime == -1);
  PolyRep<ExactField> rep;
  CHECK(rep.act(e_word(0), Vect<RatFunc>(I0({}))) == Vect<RatFunc>(I0({1})));
  CHECK(rep.act(e_word(1), Vect<RatFunc>(I0({}))) == Vect<RatFunc>(I0({1})));
}

TEST_CASE("e_m and f_m against the sum-over-boxes actions") {
  PolyRep<ExactField> rep;
  const RatFunc k = (1 - q) * (1 - t);
  for (int m = -2; m <= 2; ++m)
    for (const auto& s : enumerate_states(0, 4)) {
      const Vect<RatFunc> v(s);
      CHECK(rep.act(e_word(m), v) == ft_e_act(rep, m, v) * k);
      CHECK(rep.act(f_word(m), v) == ft_f_act(rep, m, v) * RatFunc(-1));
    }
}

TEST_CASE("psi series match the expanded product at q=2/3, t=5/7") {
  CHECK(at_point(psi_coeffs(PsiSign::Plus, P({1}), 3)) ==
        std::vector<std::string>{"-1", "209/210", "3289/4410", "41789/92610"});
  CHECK(at_point(psi_coeffs(PsiSign::Minus, P({1}), 3)) ==
        std::vector<std::string>{"-21/10", "-22/25", "-11/500", "10021/5000"});
  CHECK(at_point(psi_coeffs(PsiSign::Plus, P({2, 1}), 3)) ==
        std::vector<std::string>{"-1", "3751/4410", "848749/1944810", "113230711/857661210"});
  CHECK(at_point(psi_coeffs(PsiSign::Minus, P({2, 1}), 3)) ==
        std::vector<std::string>{"-21/10", "-121/500", "212509/50000", "91392389/5000000"});
  CHECK(psi_coeffs(PsiSign::Minus, Partition(), 0)[0] == -(q * t).inv());
}

TEST_CASE("psi by both methods through order 6") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(psi_rational(PsiSign::Plus, lam, 6) == psi_exponential(PsiSign::Plus, lam, 6));
      CHECK(psi_rational(PsiSign::Minus, lam, 6) == psi_exponential(PsiSign::Minus, lam, 6));
    }
}

TEST_CASE("h polynomials") {
  CHECK(h_poly(0) == BivarPoly::monomial(0, 0));
  CHECK(h_poly(1) == BivarPoly::monomial(1, 0) + BivarPoly::monomial(0, 1));
  CHECK(h_poly(-1).is_zero());
  CHECK(h_poly(-2) == BivarPoly::monomial(-1, -1) * RatFunc(-1));
  CHECK(h_poly(-3) == (BivarPoly::monomial(-2, -1) + BivarPoly::monomial(-1, -2)) * RatFunc(-1));
  for (int n = -4; n <= 4; ++n) CHECK(h_poly(n).swapped() == h_poly(n));
}

TEST_CASE("alpha beta decomposition") {
  const BivarPoly l1 = BivarPoly::monomial(1, 0, q.inv()) - BivarPoly::monomial(0, 1, t);
  const BivarPoly l2 = BivarPoly::monomial(1, 0) - BivarPoly::monomial(0, 1, q);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      const auto [alpha, beta] = alpha_beta(a, b);
      CHECK(l1 * alpha + l2 * beta == BivarPoly::monomial(a, b));
      CHECK(beta.swapped() == beta);
    }
}

TEST_CASE("operator names") {
  CHECK(parse_operator("e[1]").expr == Expr(e_word(1)));
  CHECK(parse_operator("f[-2]").expr == Expr(f_word(-2)));
  CHECK(parse_operator("Y[0,1]").expr == Expr(y_word({0, 1})));
  CHECK(parse_operator("A[0]").expr == Expr(a_word({0})));
  CHECK(parse_operator("phi", 2).source() == 2);
  CHECK(parse_operator("d- z1 d+ 1_0").expr == Expr(e_word(1)));
  const auto psi = parse_operator("psi+[1]");
  CHECK_FALSE(psi.expr);
  CHECK(psi.psi_index == 1);
  CHECK_THROWS_AS(parse_operator("e[1"), ParseError);
  CHECK_THROWS_AS(parse_operator("psi-[-1]"), InvalidInput);

  PolyRep<ExactField> rep;
  const Vect<RatFunc> v(I0({2, 1}));
  CHECK(apply_operator(rep, psi, v) == v * psi_coeffs(PsiSign::Plus, P({2, 1}), 1)[1]);
  CHECK(apply_operator(rep, parse_operator("e[0]"), v) == rep.act(e_word(0), v));
  CHECK_THROWS_AS(apply_operator(rep, psi, Vect<RatFunc>(State::make(Side::Plus, Partition(), {BoxPos{1, 1}}))),
                  LevelError);
}
