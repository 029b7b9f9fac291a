#include "hallpath/laurent_poly.hpp"

#include <algorithm>

#include "hallpath/errors.hpp"

namespace hallpath {

namespace {

void sort_and_combine(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return grlex_less(x.e, y.e); });
  size_t out = 0;
  for (size_t i = 0; i < v.size();) {
    size_t j = i + 1;
    mpq_class c = v[i].c;
    while (j < v.size() && v[j].e == v[i].e) c += v[j++].c;
    if (c != 0) {
      v[out].e = v[i].e;
      v[out].c = c;
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, bool subtract) {
  std::vector<Term> r;
  r.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && grlex_less(x[i].e, y[j].e))) {
      r.push_back(x[i++]);
    } else if (i == x.size() || grlex_less(y[j].e, x[i].e)) {
      r.push_back(y[j]);
      if (subtract) r.back().c = -r.back().c;
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(x[i].c - y[j].c) : mpq_class(x[i].c + y[j].c);
      if (c != 0) r.push_back({x[i].e, c});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

mpq_class rational_power(const mpq_class& x, int n) {
  if (n == 0) return 1;
  if (x == 0) {
    if (n < 0) throw PoleError("negative power of zero");
    return 0;
  }
  mpz_class num, den;
  const unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  mpq_class r = n > 0 ? mpq_class(num, den) : mpq_class(den, num);
  r.canonicalize();
  return r;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({{0, 0}, mpq_class(c)});
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(int a, int b, const mpq_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{a, b}, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exp{0, 0});
}

mpq_class LaurentPoly::coeff(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exp& x) { return grlex_less(t.e, x); });
  if (it != terms_.end() && it->e == e) return it->c;
  return 0;
}

Exp LaurentPoly::min_exp() const {
  if (terms_.empty()) return {};
  Exp m = terms_[0].e;
  for (const auto& t : terms_) {
    m.a = std::min(m.a, t.e.a);
    m.b = std::min(m.b, t.e.b);
  }
  return m;
}

Exp LaurentPoly::max_exp() const {
  if (terms_.empty()) return {};
  Exp m = terms_[0].e;
  for (const auto& t : terms_) {
    m.a = std::max(m.a, t.e.a);
    m.b = std::max(m.b, t.e.b);
  }
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  if (x.terms_.empty() || y.terms_.empty()) return r;
  if (y.terms_.size() == 1) {
    // Multiplying by a monomial preserves the order.
    r.terms_ = x.terms_;
    for (auto& t : r.terms_) {
      t.e.a += y.terms_[0].e.a;
      t.e.b += y.terms_[0].e.b;
      t.c *= y.terms_[0].c;
    }
    return r;
  }
  if (x.terms_.size() == 1) return y * x;
  std::vector<Term> v;
  v.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : x.terms_)
    for (const auto& b : y.terms_) v.push_back({{a.e.a + b.e.a, a.e.b + b.e.b}, a.c * b.c});
  sort_and_combine(v);
  r.terms_ = std::move(v);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= s;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int da, int db) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.e.a += da;
    t.e.b += db;
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), base = *this;
  while (n) {
    if (n & 1u) r *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return r;
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (size_t i = 0; i < x.terms_.size(); ++i)
    if (!(x.terms_[i].e == y.terms_[i].e) || x.terms_[i].c != y.terms_[i].c) return false;
  return true;
}

int compare(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return x.terms_.size() < y.terms_.size() ? -1 : 1;
  for (size_t i = 0; i < x.terms_.size(); ++i) {
    const auto& a = x.terms_[i];
    const auto& b = y.terms_[i];
    if (!(a.e == b.e)) return grlex_less(a.e, b.e) ? -1 : 1;
    int c = cmp(a.c, b.c);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

mpq_class LaurentPoly::eval(const mpq_class& q0, const mpq_class& t0) const {
  mpq_class r = 0;
  for (const auto& t : terms_) r += t.c * rational_power(q0, t.e.a) * rational_power(t0, t.e.b);
  return r;
}

std::string monomial_string(const Exp& e) {
  std::string s;
  auto part = [&](const char* v, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (k != 1) s += "^" + std::to_string(k);
  };
  part("q", e.a);
  part("t", e.b);
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.c;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    const std::string m = monomial_string(t.e);
    if (m.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += m;
    } else {
      s += c.get_str() + "*" + m;
    }
  }
  return s;
}

}  // namespace hallpath
