#include "hallpath/ratfunc.hpp"

#include "hallpath/detail/zpoly.hpp"
#include "hallpath/errors.hpp"

namespace hallpath {

using detail::ZPoly1;
using detail::ZPoly2;

namespace {

// p = scale * q^shift.a * t^shift.b * poly, poly integer primitive with no monomial factor.
struct ZForm {
  mpq_class scale;
  Exp shift;
  ZPoly2 poly;
};

ZForm to_zform(const LaurentPoly& p) {
  ZForm z;
  z.shift = p.min_exp();
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  const Exp hi = p.max_exp();
  z.poly.assign(hi.b - z.shift.b + 1, ZPoly1(hi.a - z.shift.a + 1));
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_class v = t.c.get_num() * (l / t.c.get_den());
    z.poly[t.e.b - z.shift.b][t.e.a - z.shift.a] = v;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& row : z.poly)
    for (auto& c : row)
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  detail::trim(z.poly);
  z.scale = mpq_class(g, l);
  z.scale.canonicalize();
  return z;
}

LaurentPoly from_zpoly(const ZPoly2& poly, const mpq_class& scale = 1, Exp shift = {}) {
  std::vector<Term> v;
  for (size_t j = 0; j < poly.size(); ++j)
    for (size_t i = 0; i < poly[j].size(); ++i)
      if (poly[j][i] != 0)
        v.push_back({{static_cast<int>(i) + shift.a, static_cast<int>(j) + shift.b}, mpq_class(poly[j][i]) * scale});
  return LaurentPoly::from_terms(std::move(v));
}

ZPoly2 zpoly_of_den(const LaurentPoly& den) { return to_zform(den).poly; }

bool is_unit_den(const LaurentPoly& d) { return d.is_constant(); }

// Divides p exactly by the integer polynomial g.
LaurentPoly div_by(const LaurentPoly& p, const ZPoly2& g) {
  if (detail::is_one(g)) return p;
  ZForm z = to_zform(p);
  ZPoly2 quo;
  if (!detail::div_exact(z.poly, g, quo)) throw ConsistencyError("inexact polynomial division");
  return from_zpoly(quo, z.scale, z.shift);
}

ZPoly2 gcd_with(const LaurentPoly& p, const ZPoly2& d) { return detail::gcd(to_zform(p).poly, d); }

// Makes den's lowest term positive, flipping num along with it.
void fix_sign(LaurentPoly& num, LaurentPoly& den) {
  if (den.lowest().c < 0) {
    num = -num;
    den = -den;
  }
}

}  // namespace

RatFunc::RatFunc(long c) : num_(c) {}
RatFunc::RatFunc(const mpq_class& c) : num_(c) {}
RatFunc::RatFunc(const LaurentPoly& p) : num_(p) {}
RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) { normalise(num, den); }

RatFunc RatFunc::monomial(int a, int b, const mpq_class& c) {
  return RatFunc(Canonical{}, LaurentPoly::monomial(a, b, c), LaurentPoly(1));
}

void RatFunc::normalise(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return;
  }
  ZForm zd = to_zform(den);
  // Fold the unit part of den into num.
  num = num.shifted(-zd.shift.a, -zd.shift.b);
  num *= mpq_class(1 / zd.scale);
  if (zd.poly.size() == 1 && zd.poly[0].size() == 1) {
    num_ = std::move(num);
    if (zd.poly[0][0] < 0) num_ = -num_;
    den_ = LaurentPoly(1);
    return;
  }
  ZForm zn = to_zform(num);
  ZPoly2 g = detail::gcd(zn.poly, zd.poly);
  if (!detail::is_one(g)) {
    ZPoly2 qn, qd;
    if (!detail::div_exact(zn.poly, g, qn) || !detail::div_exact(zd.poly, g, qd))
      throw ConsistencyError("gcd does not divide");
    zn.poly = std::move(qn);
    zd.poly = std::move(qd);
  }
  num_ = from_zpoly(zn.poly, zn.scale, zn.shift);
  den_ = from_zpoly(zd.poly);
  fix_sign(num_, den_);
  if (den_.is_constant()) {
    num_ *= mpq_class(1 / den_.lowest().c);
    den_ = LaurentPoly(1);
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const bool u1 = is_unit_den(den_), u2 = is_unit_den(o.den_);
  if (u1 && u2) {
    num_ += o.num_;
    return *this;
  }
  if (u1) {
    // a + c/d is already reduced.
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  if (u2) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  if (den_ == o.den_) {
    LaurentPoly n = num_ + o.num_;
    normalise(std::move(n), den_);
    return *this;
  }
  const ZPoly2 zb = zpoly_of_den(den_), zd = zpoly_of_den(o.den_);
  const ZPoly2 g = detail::gcd(zb, zd);
  if (detail::is_one(g)) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  ZPoly2 b1, d1;
  detail::div_exact(zb, g, b1);
  detail::div_exact(zd, g, d1);
  LaurentPoly lb1 = from_zpoly(b1), ld1 = from_zpoly(d1);
  LaurentPoly n = num_ * ld1 + o.num_ * lb1;
  if (n.is_zero()) return *this = RatFunc();
  LaurentPoly dd = den_ * ld1;
  const ZPoly2 g2 = gcd_with(n, g);
  if (!detail::is_one(g2)) {
    n = div_by(n, g2);
    dd = div_by(dd, g2);
  }
  fix_sign(n, dd);
  num_ = std::move(n);
  den_ = std::move(dd);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  const bool u1 = is_unit_den(den_), u2 = is_unit_den(o.den_);
  if (u1 && u2) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!u2 && !a.is_monomial()) {
    ZPoly2 g = gcd_with(a, zpoly_of_den(d));
    if (!detail::is_one(g)) {
      a = div_by(a, g);
      d = div_by(d, g);
    }
  }
  if (!u1 && !c.is_monomial()) {
    ZPoly2 g = gcd_with(c, zpoly_of_den(b));
    if (!detail::is_one(g)) {
      c = div_by(c, g);
      b = div_by(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  fix_sign(num_, den_);
  if (den_.is_constant()) {
    num_ *= mpq_class(1 / den_.lowest().c);
    den_ = LaurentPoly(1);
  }
  return *this;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.is_monomial()) {
    // den/num with num a unit: fold the unit into the new numerator.
    const Term& m = num_.lowest();
    LaurentPoly n = den_.shifted(-m.e.a, -m.e.b);
    n *= mpq_class(1 / m.c);
    return RatFunc(Canonical{}, std::move(n), LaurentPoly(1));
  }
  RatFunc r;
  ZForm z = to_zform(num_);
  LaurentPoly n = den_.shifted(-z.shift.a, -z.shift.b);
  n *= mpq_class(1 / z.scale);
  LaurentPoly d = from_zpoly(z.poly);
  fix_sign(n, d);
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inv(); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc r(1), base = *this;
  unsigned k = static_cast<unsigned>(n);
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

int compare(const RatFunc& x, const RatFunc& y) {
  int c = compare(x.den_, y.den_);
  if (c != 0) return c;
  return compare(x.num_, y.num_);
}

mpq_class RatFunc::eval(const mpq_class& q0, const mpq_class& t0) const {
  mpq_class d = den_.eval(q0, t0);
  if (d == 0) throw PoleError("denominator vanishes at (" + q0.get_str() + ", " + t0.get_str() + ")");
  return num_.eval(q0, t0) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

HalfQScalar::HalfQScalar(RatFunc v, int half) : value_(std::move(v)) {
  const int whole = half >= 0 ? half / 2 : -((-half + 1) / 2);
  half_ = half - 2 * whole;
  if (whole != 0) value_ *= RatFunc::monomial(whole, 0);
}

HalfQScalar& HalfQScalar::operator*=(const HalfQScalar& o) {
  value_ *= o.value_;
  half_ += o.half_;
  if (half_ == 2) {
    half_ = 0;
    value_ *= RatFunc::q();
  }
  return *this;
}

RatFunc HalfQScalar::to_ratfunc() const {
  if (half_ != 0 && !value_.is_zero()) throw InvalidInput("result carries a half-integral power of q");
  return value_;
}

std::string HalfQScalar::to_string() const {
  if (half_ == 0) return value_.to_string();
  return "q^(1/2)*(" + value_.to_string() + ")";
}

}  // namespace hallpath
