#include "hallpath/series.hpp"

#include "hallpath/errors.hpp"

namespace hallpath {

Series series_mul(const Series& a, const Series& b, int order) {
  Series r(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_div(const Series& a, const Series& b, int order) {
  if (b.empty() || b[0].is_zero()) throw PoleError("series divisor has zero constant term");
  const RatFunc inv0 = b[0].inv();
  Series r(order + 1);
  for (int n = 0; n <= order; ++n) {
    RatFunc acc = n < static_cast<int>(a.size()) ? a[n] : RatFunc();
    for (int k = 1; k <= n && k < static_cast<int>(b.size()); ++k)
      if (!b[k].is_zero() && !r[n - k].is_zero()) acc -= b[k] * r[n - k];
    r[n] = acc * inv0;
  }
  return r;
}

Series series_exp(const Series& log, int order) {
  if (!log.empty() && !log[0].is_zero()) throw InvalidInput("series_exp needs a zero constant term");
  Series e(order + 1);
  e[0] = RatFunc(1);
  for (int n = 1; n <= order; ++n) {
    RatFunc acc;
    for (int m = 1; m <= n && m < static_cast<int>(log.size()); ++m)
      if (!log[m].is_zero()) acc += RatFunc(m) * log[m] * e[n - m];
    e[n] = acc / RatFunc(n);
  }
  return e;
}

AuxPoly::AuxPoly(const RatFunc& c) {
  if (!c.is_zero()) c_.emplace(0, c);
}

AuxPoly AuxPoly::var(int power, const RatFunc& c) {
  AuxPoly p;
  if (!c.is_zero()) p.c_.emplace(power, c);
  return p;
}

int AuxPoly::low() const { return c_.empty() ? 0 : c_.begin()->first; }
int AuxPoly::high() const { return c_.empty() ? 0 : c_.rbegin()->first; }

RatFunc AuxPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? RatFunc() : it->second;
}

void AuxPoly::add_term(int k, const RatFunc& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

AuxPoly& AuxPoly::operator+=(const AuxPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k, v);
  return *this;
}

AuxPoly& AuxPoly::operator-=(const AuxPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k, -v);
  return *this;
}

AuxPoly operator*(const AuxPoly& a, const AuxPoly& b) {
  AuxPoly r;
  for (const auto& [i, x] : a.c_)
    for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
  return r;
}

std::string AuxPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + v.to_string() + ")";
    if (k != 0) s += "*" + var + (k == 1 ? "" : "^" + std::to_string(k));
  }
  return s;
}

Series series_expand(const AuxRatFunc& f, ExpandAt at, int order) {
  if (f.den.is_zero()) throw DivisionByZero();
  Series n(order + 1), d(order + 1);
  if (f.num.is_zero()) return n;
  if (at == ExpandAt::Zero) {
    const int base = f.den.low();
    if (f.num.low() < base) throw PoleError("expansion point is a pole of uncancellable order");
    for (int i = 0; i <= order; ++i) {
      n[i] = f.num.coeff(base + i);
      d[i] = f.den.coeff(base + i);
    }
  } else {
    const int base = f.den.high();
    if (f.num.high() > base) throw PoleError("expansion point is a pole of uncancellable order");
    for (int i = 0; i <= order; ++i) {
      n[i] = f.num.coeff(base - i);
      d[i] = f.den.coeff(base - i);
    }
  }
  return series_div(n, d, order);
}

BivarPoly BivarPoly::monomial(int i, int j, const RatFunc& c) {
  BivarPoly p;
  if (!c.is_zero()) p.c_.emplace(Key{i, j}, c);
  return p;
}

RatFunc BivarPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? RatFunc() : it->second;
}

void BivarPoly::add_term(const Key& k, const RatFunc& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k, v);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k, -v);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const RatFunc& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [k, v] : c_) v *= s;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [k1, x] : a.c_)
    for (const auto& [k2, y] : b.c_) r.add_term({k1.first + k2.first, k1.second + k2.second}, x * y);
  return r;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly r;
  for (const auto& [k, v] : c_) r.c_.emplace(Key{k.second, k.first}, v);
  return r;
}

RatFunc BivarPoly::eval(const RatFunc& z, const RatFunc& w) const {
  RatFunc r;
  for (const auto& [k, v] : c_) r += v * z.pow(k.first) * w.pow(k.second);
  return r;
}

std::string BivarPoly::to_string(const std::string& x, const std::string& y) const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + v.to_string() + ")";
    if (k.first != 0) s += "*" + x + (k.first == 1 ? "" : "^" + std::to_string(k.first));
    if (k.second != 0) s += "*" + y + (k.second == 1 ? "" : "^" + std::to_string(k.second));
  }
  return s;
}

BivarPoly g_poly() {
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  auto lin = [](const RatFunc& a) { return BivarPoly::monomial(1, 0) - BivarPoly::monomial(0, 1, a); };
  return lin(q) * lin(t) * lin((q * t).inv());
}

RatFunc sigma1() {
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  return q + t + (q * t).inv();
}

RatFunc sigma2() {
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  return q * t + q.inv() + t.inv();
}

}  // namespace hallpath
