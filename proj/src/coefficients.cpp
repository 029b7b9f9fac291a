#include "hallpath/coefficients.hpp"

#include <iostream>

#include "hallpath/errors.hpp"

namespace hallpath {

namespace {

const RatFunc& rq() {
  static const RatFunc v = RatFunc::q();
  return v;
}
const RatFunc& rt() {
  static const RatFunc v = RatFunc::t();
  return v;
}

// 1 - q^a t^b
LaurentPoly binom(int a, int b) { return LaurentPoly(1) - LaurentPoly::monomial(a, b); }

LaurentPoly one_minus_q_one_minus_t() {
  return LaurentPoly(1) - LaurentPoly::monomial(1, 0) - LaurentPoly::monomial(0, 1) + LaurentPoly::monomial(1, 1);
}

}  // namespace

QTCharge charge_of(const LaurentPoly& p) {
  QTCharge phi;
  for (const auto& t : p.terms()) {
    if (t.c.get_den() != 1) throw InvalidInput("charge coefficients must be integers");
    phi[t.e] = t.c.get_num().get_si();
  }
  return phi;
}

RatFunc lambda_genus(const QTCharge& phi) {
  LaurentPoly num(1), den(1);
  for (const auto& [e, m] : phi) {
    if (m == 0) continue;
    if (e.a == 0 && e.b == 0) {
      if (m > 0) {
        std::clog << "lambda_genus: positive multiplicity at q^0 t^0, result is zero\n";
        return RatFunc();
      }
      throw PoleError("negative multiplicity at q^0 t^0");
    }
    LaurentPoly f = binom(e.a, e.b).pow(static_cast<unsigned>(m > 0 ? m : -m));
    if (m > 0)
      num *= f;
    else
      den *= f;
  }
  return RatFunc(num, den);
}

RatFunc content_of(const BoxPos& b) {
  const Exp e = b.content();
  return RatFunc::monomial(e.a, e.b);
}

LaurentPoly box_sum(const Partition& lambda, bool dual) {
  std::vector<Term> v;
  for (const auto& b : lambda.boxes()) {
    Exp e = b.content();
    if (dual) e = {-e.a, -e.b};
    v.push_back({e, 1});
  }
  return LaurentPoly::from_terms(std::move(v));
}

RatFunc c_lambda_form(const Partition& lambda, const BoxPos& x) {
  if (!is_addable(lambda, x)) throw InvalidInput("box " + x.to_string() + " is not addable to " + lambda.to_string());
  const Exp e = x.content();
  const LaurentPoly xinv = LaurentPoly::monomial(-e.a, -e.b);
  LaurentPoly ch = -xinv + one_minus_q_one_minus_t() * box_sum(lambda) * xinv + LaurentPoly(1);
  return -lambda_genus(charge_of(ch));
}

RatFunc c_product_form(const Partition& lambda, const BoxPos& x) {
  if (!is_addable(lambda, x)) throw InvalidInput("box " + x.to_string() + " is not addable to " + lambda.to_string());
  const int i = x.row, len = lambda.length(), li = lambda.part(i);
  LaurentPoly num = -binom(0, 1), den(1);
  for (int j = 1; j <= len; ++j) {
    if (j == i) continue;
    const int dq = lambda.part(j) - li;
    num *= binom(dq, j - i + 1);
    den *= binom(dq, j - i);
  }
  // Telescoped tail of the rows below the last nonzero one.
  const int j0 = i <= len ? len + 1 : len + 2;
  den *= binom(-li, j0 - i);
  return RatFunc(num, den);
}

RatFunc c_coeff(const Partition& lambda, const BoxPos& x) {
  RatFunc a = c_lambda_form(lambda, x);
  RatFunc b = c_product_form(lambda, x);
  if (!(a == b))
    throw ConsistencyError("c(" + lambda.to_string() + ";" + x.to_string() + "): " + a.to_string() + " vs " +
                           b.to_string());
  return a;
}

RatFunc cstar_lambda_form(const Partition& mu, const BoxPos& x) {
  if (!is_removable(mu, x)) throw InvalidInput("box " + x.to_string() + " is not removable from " + mu.to_string());
  const Partition lambda = mu.remove(x);
  const Exp e = x.content();
  LaurentPoly ch = -(one_minus_q_one_minus_t() * box_sum(lambda, true) * LaurentPoly::monomial(e.a, e.b));
  return RatFunc::monomial(-e.a, -e.b) * lambda_genus(charge_of(ch));
}

RatFunc cstar_product_form(const Partition& mu, const BoxPos& x) {
  if (!is_removable(mu, x)) throw InvalidInput("box " + x.to_string() + " is not removable from " + mu.to_string());
  const Partition lambda = mu.remove(x);
  const int i = x.row, len = lambda.length(), li = lambda.part(i);
  const Exp e = x.content();
  LaurentPoly num = LaurentPoly::monomial(-e.a, -e.b);
  LaurentPoly den = binom(1, 0);
  for (int j = 1; j <= len; ++j) {
    if (j == i) continue;
    const int dq = li - lambda.part(j) + 1;
    num *= binom(dq, i - j + 1);
    den *= binom(dq, i - j);
  }
  const int j0 = i <= len ? len + 1 : len + 2;
  num *= binom(li + 1, i - j0 + 1);
  return RatFunc(num, den);
}

RatFunc cstar_coeff(const Partition& mu, const BoxPos& x) { return cstar_product_form(mu, x); }

RatFunc d_lambda(const Partition& lambda) {
  const LaurentPoly b = box_sum(lambda), bs = box_sum(lambda, true);
  LaurentPoly ch = -bs + one_minus_q_one_minus_t() * b * bs;
  int qa = 0, tb = 0;
  for (const auto& box : lambda.boxes()) {
    qa += box.content().a;
    tb += box.content().b;
  }
  return RatFunc::monomial(qa, tb) * lambda_genus(charge_of(ch));
}

IdentitySides monodromy(const Partition& lambda, const BoxPos& x, const BoxPos& y) {
  if (x == y) throw InvalidInput("monodromy needs distinct boxes");
  const RatFunc lhs = c_coeff(lambda, x) * c_coeff(lambda.add(x), y) / (c_coeff(lambda, y) * c_coeff(lambda.add(y), x));
  const RatFunc X = content_of(x), Y = content_of(y);
  const RatFunc &q = rq(), &t = rt();
  const RatFunc rhs = -((X - t * Y) * (X - q * Y) * (Y - q * t * X)) / ((Y - t * X) * (Y - q * X) * (X - q * t * Y));
  return {lhs, rhs};
}

IdentitySides dual_monodromy(const Partition& mu, const BoxPos& x, const BoxPos& y) {
  if (x == y) throw InvalidInput("monodromy needs distinct boxes");
  const RatFunc lhs =
      cstar_coeff(mu, x) * cstar_coeff(mu.remove(x), y) / (cstar_coeff(mu, y) * cstar_coeff(mu.remove(y), x));
  const RatFunc X = content_of(x), Y = content_of(y);
  const RatFunc &q = rq(), &t = rt();
  const RatFunc rhs = -((Y - t * X) * (Y - q * X) * (X - q * t * Y)) / ((X - t * Y) * (X - q * Y) * (Y - q * t * X));
  return {lhs, rhs};
}

IdentitySides coefficient_ratio(const Partition& lambda, const BoxPos& x) {
  const Partition mu = lambda.add(x);
  const RatFunc &q = rq(), &t = rt();
  const RatFunc lhs = c_coeff(lambda, x) / cstar_coeff(mu, x);
  const RatFunc rhs = -((1 - q) * (1 - t) * d_lambda(mu)) / ((1 - q * t) * d_lambda(lambda));
  return {lhs, rhs};
}

}  // namespace hallpath
