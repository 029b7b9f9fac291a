#include "hallpath/eha.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

#include "hallpath/coefficients.hpp"
#include "hallpath/errors.hpp"

namespace hallpath {

namespace {

RatFunc Q3() { return (RatFunc::q() * RatFunc::t()).inv(); }

}  // namespace

Word e_word(int m) {
  std::vector<Letter> ls{Letter::dminus()};
  if (m != 0) ls.push_back(Letter::z(1, m));
  ls.push_back(Letter::dplus());
  return Word(std::move(ls), 0);
}

Word f_word(int m) {
  std::vector<Letter> ls{Letter::dplus()};
  if (m != 0) ls.push_back(Letter::z(1, m));
  ls.push_back(Letter::dminus());
  return Word(std::move(ls), 0);
}

Word a_word(const std::vector<int>& m) {
  if (m.empty()) throw InvalidInput("A needs at least one index");
  std::vector<Letter> ls{Letter::dminus()};
  for (size_t i = 0; i < m.size(); ++i) {
    if (i > 0) ls.push_back(Letter::phi());
    if (m[i] != 0) ls.push_back(Letter::z(1, m[i]));
  }
  return Word(std::move(ls), 1);
}

Word y_word(const std::vector<int>& m) {
  Word w = a_word(m);
  w.letters.push_back(Letter::dplus());
  w.source = 0;
  return w;
}

Expr phi_expr(int level) {
  Expr e(Word({Letter::dplus(), Letter::dminus()}, level));
  e -= Expr(Word({Letter::dminus(), Letter::dplus()}, level));
  return e * (RatFunc::q() - 1).inv();
}

Word z_monomial(const std::vector<int>& exps, int level) {
  std::vector<Letter> ls;
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) ls.push_back(Letter::z(static_cast<int>(i) + 1, exps[i]));
  Word w(std::move(ls), level);
  w.validate();
  return w;
}

Expr zpoly_expr(const BivarPoly& f, int level, int i) {
  Expr out(level, level);
  const int k = std::abs(level);
  for (const auto& [key, c] : f.coeffs()) {
    std::vector<int> exps(k, 0);
    if (i < 1 || i + 1 > k) throw LevelError("z" + std::to_string(i) + ", z" + std::to_string(i + 1) +
                                             " do not exist at level " + std::to_string(level));
    exps[i - 1] = key.first;
    exps[i] = key.second;
    out.add(z_monomial(exps, level), c);
  }
  return out;
}

template <class F>
Vect<typename F::Scalar> ft_e_act(PolyRep<F>& rep, int m, const Vect<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  Vect<S> out;
  const RatFunc pre = -((1 - RatFunc::q()) * (1 - RatFunc::t())).inv();
  for (const auto& [s, coef] : v) {
    if (s.level() != 0) throw LevelError("e~ acts on level 0 only");
    for (const auto& x : addable_boxes(s.lambda)) {
      State n = State::level0(s.lambda.add(x));
      if (n.total_boxes() > rep.policy().max_boxes)
        throw TruncationOverflow("state " + n.to_string() + " exceeds the box cap");
      out.add(n, rep.lift(pre * rep.c(s.lambda, x) * content_of(x).pow(m)) * coef);
    }
  }
  return out;
}

template <class F>
Vect<typename F::Scalar> ft_f_act(PolyRep<F>& rep, int m, const Vect<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  Vect<S> out;
  for (const auto& [s, coef] : v) {
    if (s.level() != 0) throw LevelError("f~ acts on level 0 only");
    for (const auto& x : removable_boxes(s.lambda))
      out.add(State::level0(s.lambda.remove(x)), rep.lift(rep.cstar(s.lambda, x) * content_of(x).pow(m)) * coef);
  }
  return out;
}

template Vect<RatFunc> ft_e_act(PolyRep<ExactField>&, int, const Vect<RatFunc>&);
template Vect<RatFunc> ft_f_act(PolyRep<ExactField>&, int, const Vect<RatFunc>&);
template Vect<mpq_class> ft_e_act(PolyRep<PointField>&, int, const Vect<mpq_class>&);
template Vect<mpq_class> ft_f_act(PolyRep<PointField>&, int, const Vect<mpq_class>&);

Series psi_rational(PsiSign sign, const Partition& lambda, int order) {
  if (order < 0) throw InvalidInput("order must be non-negative");
  const RatFunc q = RatFunc::q(), t = RatFunc::t(), q3 = Q3();
  const AuxPoly z = AuxPoly::var();
  AuxRatFunc f{AuxPoly(RatFunc(-1)) * (z - AuxPoly(q3)), z - AuxPoly(RatFunc(1))};
  for (const auto& b : lambda.boxes()) {
    const RatFunc x = content_of(b);
    f.num = f.num * (z - AuxPoly(q.inv() * x)) * (z - AuxPoly(t.inv() * x)) * (z - AuxPoly(q * t * x));
    f.den = f.den * (z - AuxPoly(q * x)) * (z - AuxPoly(t * x)) * (z - AuxPoly(q3 * x));
  }
  return series_expand(f, sign == PsiSign::Plus ? ExpandAt::Infinity : ExpandAt::Zero, order);
}

Series psi_exponential(PsiSign sign, const Partition& lambda, int order) {
  if (order < 0) throw InvalidInput("order must be non-negative");
  const RatFunc q = RatFunc::q(), t = RatFunc::t(), q3 = Q3();
  const State s = State::level0(lambda);
  Series pre(order + 1, 1 - q3);
  Series log(order + 1);
  pre[0] = sign == PsiSign::Plus ? RatFunc(-1) : -q3;
  if (sign == PsiSign::Plus)
    for (int j = 1; j <= order; ++j) pre[j] = -(1 - q3);
  for (int m = 1; m <= order; ++m) {
    const RatFunc K = (1 - q.pow(m)) * (1 - t.pow(m)) * (1 - q3.pow(m));
    const RatFunc p = delta_eigenvalue(s, sign == PsiSign::Plus ? m : -m);
    log[m] = p * K * RatFunc(mpq_class(1, m));
    if (sign == PsiSign::Plus) log[m] = -log[m];
  }
  return series_mul(pre, series_exp(log, order), order);
}

Series psi_coeffs(PsiSign sign, const Partition& lambda, int order) {
  Series a = psi_rational(sign, lambda, order);
  Series b = psi_exponential(sign, lambda, order);
  for (int j = 0; j <= order; ++j)
    if (!(a[j] == b[j]))
      throw ConsistencyError(std::string("psi") + (sign == PsiSign::Plus ? "+" : "-") + " on I_" +
                             lambda.to_string() + " at order " + std::to_string(j) + ": product form gives " +
                             a[j].to_string() + ", exponential form gives " + b[j].to_string());
  return a;
}

BivarPoly h_poly(int n) {
  BivarPoly h;
  if (n >= 0) {
    for (int i = 0; i <= n; ++i) h += BivarPoly::monomial(i, n - i);
    return h;
  }
  if (n == -1) return h;
  const int m = n + 1;
  return BivarPoly::monomial(m, m, RatFunc(-1)) * h_poly(-m - 1);
}

namespace {

using AB = std::pair<BivarPoly, BivarPoly>;

// Decomposition of z1^n (first = true) or z2^n, n >= 0.
const AB& ab_power(bool first, int n) {
  static std::map<std::pair<bool, int>, AB> memo;
  auto key = std::make_pair(first, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  AB r;
  if (n == 0) {
    const RatFunc D = ((t + q.inv()) * (1 - t)).inv();
    r.first = (BivarPoly::monomial(-1, 0) + BivarPoly::monomial(0, -1, t)) * D;
    r.second = (BivarPoly::monomial(-1, 0) + BivarPoly::monomial(0, -1)) * (-q.inv() * t * D);
  } else if (n == 1) {
    if (first) {
      r.first = BivarPoly::monomial(0, 0, q / (1 - t));
      r.second = BivarPoly::monomial(0, 0, -t / (1 - t));
    } else {
      r.first = BivarPoly::monomial(0, 0, (1 - t).inv());
      r.second = BivarPoly::monomial(0, 0, -q.inv() / (1 - t));
    }
  } else {
    const BivarPoly e1 = BivarPoly::monomial(1, 0) + BivarPoly::monomial(0, 1);
    const BivarPoly e2 = BivarPoly::monomial(1, 1);
    const AB& a = ab_power(first, n - 1);
    const AB& b = ab_power(first, n - 2);
    r.first = a.first * e1 - b.first * e2;
    r.second = a.second * e1 - b.second * e2;
  }
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

std::pair<BivarPoly, BivarPoly> alpha_beta(int m1, int m2) {
  const int c = std::min(m1, m2);
  const AB& base = m1 >= m2 ? ab_power(true, m1 - c) : ab_power(false, m2 - c);
  const BivarPoly sym = BivarPoly::monomial(c, c);
  return {base.first * sym, base.second * sym};
}

SignConstants discover_signs() {
  PolyRep<ExactField> rep(ExactField{}, {2, 1});
  SignConstants sc;
  const State empty = State::level0(Partition());
  const State one = State::level0(Partition({1}));
  const RatFunc e = rep.act(e_word(0), Vect<RatFunc>(empty)).coeff(one);
  const RatFunc et = ft_e_act(rep, 0, Vect<RatFunc>(empty)).coeff(one) * (1 - RatFunc::q()) * (1 - RatFunc::t());
  const RatFunc f = rep.act(f_word(0), Vect<RatFunc>(one)).coeff(empty);
  const RatFunc ft = ft_f_act(rep, 0, Vect<RatFunc>(one)).coeff(empty);
  auto sign = [](const RatFunc& a, const RatFunc& b, const char* what) {
    if (a == b) return 1;
    if (a == -b) return -1;
    throw ConsistencyError(std::string(what) + " differs from its sum-over-boxes form by more than a sign");
  };
  sc.s = sign(e, et, "e_0");
  sc.s_prime = sign(f, ft, "f_0");
  return sc;
}

namespace {

std::vector<int> index_list(const std::string& text, size_t open) {
  const size_t close = text.find(']', open);
  if (close == std::string::npos || close + 1 != text.size())
    throw ParseError("expected ']' at the end of '" + text + "'", close == std::string::npos ? text.size() : close + 1);
  std::vector<int> out;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  std::string item;
  size_t pos = open + 1;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer index, got '" + item + "'", pos);
    }
    for (size_t i = used; i < item.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(item[i])))
        throw ParseError("expected an integer index, got '" + item + "'", pos);
    out.push_back(v);
    pos += item.size() + 1;
  }
  return out;
}

int single_index(const std::string& text, size_t open) {
  const auto v = index_list(text, open);
  if (v.size() != 1) throw ParseError("expected one index in '" + text + "'", open + 1);
  return v[0];
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

NamedOperator parse_operator(const std::string& text, int level) {
  NamedOperator op;
  op.name = text;
  if (starts(text, "psi+[") || starts(text, "psi-[")) {
    op.psi = text[3] == '+' ? PsiSign::Plus : PsiSign::Minus;
    op.psi_index = single_index(text, 4);
    if (op.psi_index < 0) throw InvalidInput("psi index must be non-negative; psi-[m] is the coefficient of z^m");
  } else if (starts(text, "e[")) {
    op.expr = Expr(e_word(single_index(text, 1)));
  } else if (starts(text, "f[")) {
    op.expr = Expr(f_word(single_index(text, 1)));
  } else if (starts(text, "Y[")) {
    op.expr = Expr(y_word(index_list(text, 1)));
  } else if (starts(text, "A[")) {
    op.expr = Expr(a_word(index_list(text, 1)));
  } else if (text == "phi") {
    op.expr = phi_expr(level);
  } else {
    Word w = parse_word(text, level);
    w.validate();
    op.expr = Expr(w);
  }
  return op;
}

template <class F>
Vect<typename F::Scalar> apply_operator(PolyRep<F>& rep, const NamedOperator& op, const Vect<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  if (op.expr) return rep.act(*op.expr, v);
  Vect<S> out;
  for (const auto& [s, c] : v) {
    if (s.level() != 0) throw LevelError(op.name + " acts on level 0 only");
    out.add(s, rep.lift(psi_coeffs(*op.psi, s.lambda, op.psi_index)[op.psi_index]) * c);
  }
  return out;
}

template Vect<RatFunc> apply_operator(PolyRep<ExactField>&, const NamedOperator&, const Vect<RatFunc>&);
template Vect<mpq_class> apply_operator(PolyRep<PointField>&, const NamedOperator&, const Vect<mpq_class>&);

}  // namespace hallpath
