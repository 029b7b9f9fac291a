#include "hallpath/detail/zpoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace hallpath::detail {

namespace {

constexpr int kHeuristicTries = 6;

int deg(const ZPoly1& p) { return static_cast<int>(p.size()) - 1; }
int deg(const ZPoly2& p) { return static_cast<int>(p.size()) - 1; }

ZPoly1 scale(const ZPoly1& p, const mpz_class& s) {
  ZPoly1 r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * s;
  trim(r);
  return r;
}

ZPoly1 divide_scalar(const ZPoly1& p, const mpz_class& s) {
  ZPoly1 r(p.size());
  for (size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), s.get_mpz_t());
  return r;
}

ZPoly2 divide_scalar(const ZPoly2& p, const mpz_class& s) {
  ZPoly2 r(p.size());
  for (size_t j = 0; j < p.size(); ++j) r[j] = divide_scalar(p[j], s);
  return r;
}

ZPoly2 scale(const ZPoly2& p, const mpz_class& s) {
  ZPoly2 r(p.size());
  for (size_t j = 0; j < p.size(); ++j) r[j] = scale(p[j], s);
  trim(r);
  return r;
}

ZPoly1 sub(const ZPoly1& a, const ZPoly1& b) {
  ZPoly1 r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly1 primitive(const ZPoly1& p) {
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  return divide_scalar(p, c);
}

mpz_class eval(const ZPoly1& p, const mpz_class& x) {
  mpz_class r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

ZPoly1 eval_q(const ZPoly2& p, const mpz_class& x) {
  ZPoly1 r(p.size());
  for (size_t j = 0; j < p.size(); ++j) r[j] = eval(p[j], x);
  trim(r);
  return r;
}

// Symmetric x-adic digits of an integer, read back as a polynomial.
ZPoly1 reconstruct(mpz_class v, const mpz_class& x) {
  ZPoly1 r;
  mpz_class half = x / 2;
  while (v != 0) {
    mpz_class d;
    mpz_fdiv_r(d.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
    if (d > half) d -= x;
    r.push_back(d);
    v = (v - d) / x;
  }
  trim(r);
  return r;
}

mpz_class next_xi(const mpz_class& xi) { return xi * 73794 / 27011 + 1; }

// Pseudo-remainder of a by b over Z.
ZPoly1 prem(ZPoly1 a, const ZPoly1& b) {
  const int db = deg(b);
  const mpz_class& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    mpz_class la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

ZPoly1 gcd_prs1(ZPoly1 a, ZPoly1 b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly1 r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

ZPoly1 content_t(const ZPoly2& p) {
  ZPoly1 g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.size() == 1 && abs(g[0]) == 1) break;
  }
  return g;
}

ZPoly2 divide_by_qpoly(const ZPoly2& p, const ZPoly1& c) {
  ZPoly2 r(p.size());
  for (size_t j = 0; j < p.size(); ++j) {
    if (p[j].empty()) continue;
    div_exact(p[j], c, r[j]);
  }
  return r;
}

ZPoly2 prem2(ZPoly2 a, const ZPoly2& b) {
  const int db = deg(b);
  const ZPoly1& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    ZPoly1 la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c = mul(c, lb);
    for (int i = 0; i <= db; ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
    trim(a);
  }
  return a;
}

ZPoly2 normalise_sign(ZPoly2 p) {
  for (const auto& c : p) {
    if (c.empty()) continue;
    for (const auto& x : c) {
      if (x == 0) continue;
      if (x < 0) {
        for (auto& cc : p)
          for (auto& xx : cc) xx = -xx;
      }
      return p;
    }
  }
  return p;
}

}  // namespace

void trim(ZPoly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZPoly2& p) {
  for (auto& c : p) trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

mpz_class content(const ZPoly1& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class content(const ZPoly2& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    for (const auto& x : c) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return g;
    }
  }
  return g;
}

mpz_class max_norm(const ZPoly1& p) {
  mpz_class m = 0;
  for (const auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

mpz_class max_norm(const ZPoly2& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    mpz_class n = max_norm(c);
    if (n > m) m = n;
  }
  return m;
}

ZPoly1 mul(const ZPoly1& a, const ZPoly1& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly1 r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly2 mul(const ZPoly2& a, const ZPoly2& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly2 r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      ZPoly1 p = mul(a[i], b[j]);
      ZPoly1& dst = r[i + j];
      if (dst.size() < p.size()) dst.resize(p.size());
      for (size_t k = 0; k < p.size(); ++k) dst[k] += p[k];
    }
  }
  trim(r);
  return r;
}

bool div_exact(const ZPoly1& a, const ZPoly1& b, ZPoly1& out) {
  out.clear();
  if (b.empty()) return false;
  if (a.empty()) return true;
  if (deg(a) < deg(b)) return false;
  ZPoly1 r = a;
  const int db = deg(b);
  out.assign(deg(a) - db + 1, 0);
  const mpz_class& lb = b.back();
  for (int i = deg(a); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    out[i - db] = qc;
    for (int k = 0; k <= db; ++k) mpz_submul(r[i - db + k].get_mpz_t(), qc.get_mpz_t(), b[k].get_mpz_t());
  }
  for (int i = 0; i < db && i < static_cast<int>(r.size()); ++i)
    if (r[i] != 0) return false;
  trim(out);
  return true;
}

bool div_exact(const ZPoly2& a, const ZPoly2& b, ZPoly2& out) {
  out.clear();
  if (b.empty()) return false;
  if (a.empty()) return true;
  if (deg(a) < deg(b)) return false;
  ZPoly2 r = a;
  const int db = deg(b);
  out.assign(deg(a) - db + 1, ZPoly1{});
  const ZPoly1& lb = b.back();
  for (int i = deg(a); i >= db; --i) {
    if (r[i].empty()) continue;
    ZPoly1 qc;
    if (!div_exact(r[i], lb, qc)) return false;
    for (int k = 0; k <= db; ++k) {
      if (b[k].empty()) continue;
      r[i - db + k] = sub(r[i - db + k], mul(qc, b[k]));
    }
    out[i - db] = std::move(qc);
  }
  for (int i = 0; i < db && i < static_cast<int>(r.size()); ++i)
    if (!r[i].empty()) return false;
  trim(out);
  return true;
}

ZPoly1 gcd(const ZPoly1& a0, const ZPoly1& b0) {
  if (a0.empty()) return b0.empty() ? ZPoly1{} : scale(b0, b0.back() < 0 ? mpz_class(-1) : mpz_class(1));
  if (b0.empty()) return scale(a0, a0.back() < 0 ? mpz_class(-1) : mpz_class(1));
  mpz_class ca = content(a0), cb = content(b0), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (deg(a0) == 0 || deg(b0) == 0) return ZPoly1{c};
  ZPoly1 a = divide_scalar(a0, ca), b = divide_scalar(b0, cb);
  if (a == b || a == scale(b, -1)) return scale(primitive(a), c);

  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 2;
  for (int attempt = 0; attempt < kHeuristicTries; ++attempt) {
    mpz_class gamma;
    mpz_class ea = eval(a, xi), eb = eval(b, xi);
    mpz_gcd(gamma.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    ZPoly1 g = primitive(reconstruct(gamma, xi));
    if (!g.empty()) {
      ZPoly1 tmp;
      if (div_exact(a, g, tmp) && div_exact(b, g, tmp)) return scale(g, c);
    }
    xi = next_xi(xi);
  }
  return scale(gcd_prs1(a, b), c);
}

ZPoly2 gcd_prs(const ZPoly2& a0, const ZPoly2& b0) {
  if (a0.empty()) return normalise_sign(b0);
  if (b0.empty()) return normalise_sign(a0);
  ZPoly1 ca = content_t(a0), cb = content_t(b0);
  ZPoly1 c = gcd(ca, cb);
  ZPoly2 a = divide_by_qpoly(a0, ca), b = divide_by_qpoly(b0, cb);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty() && deg(b) > 0) {
    ZPoly2 r = prem2(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    b = divide_by_qpoly(r, content_t(r));
  }
  // b is a nonzero t-constant: the primitive gcd is 1.
  if (!b.empty()) a = ZPoly2{ZPoly1{1}};
  ZPoly2 res;
  for (const auto& x : a) res.push_back(mul(x, c));
  trim(res);
  return normalise_sign(res);
}

ZPoly2 gcd(const ZPoly2& a0, const ZPoly2& b0) {
  if (a0.empty()) return normalise_sign(b0);
  if (b0.empty()) return normalise_sign(a0);
  mpz_class ca = content(a0), cb = content(b0), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly2 a = divide_scalar(a0, ca), b = divide_scalar(b0, cb);
  if (a.size() == 1 && b.size() == 1) {
    ZPoly1 g = gcd(a[0], b[0]);
    return normalise_sign(ZPoly2{scale(g, c)});
  }
  if (a == b) return normalise_sign(scale(a, c));

  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 2;
  for (int attempt = 0; attempt < kHeuristicTries; ++attempt) {
    ZPoly1 ea = eval_q(a, xi), eb = eval_q(b, xi);
    if (static_cast<int>(ea.size()) == static_cast<int>(a.size()) &&
        static_cast<int>(eb.size()) == static_cast<int>(b.size())) {
      ZPoly1 gt = gcd(ea, eb);
      ZPoly2 g;
      for (const auto& coef : gt) g.push_back(reconstruct(coef, xi));
      trim(g);
      if (!g.empty()) {
        mpz_class gc = content(g);
        g = divide_scalar(g, gc);
        ZPoly2 tmp;
        if (div_exact(a, g, tmp) && div_exact(b, g, tmp)) return normalise_sign(scale(g, c));
      }
    }
    xi = next_xi(xi);
  }
  return normalise_sign(scale(gcd_prs(a, b), c));
}

bool is_one(const ZPoly2& p) { return p.size() == 1 && p[0].size() == 1 && p[0][0] == 1; }

}  // namespace hallpath::detail
