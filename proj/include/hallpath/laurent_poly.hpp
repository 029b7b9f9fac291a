#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace hallpath {

// Exponents of the monomial q^a t^b.
struct Exp {
  int a = 0;
  int b = 0;
  friend bool operator==(const Exp&, const Exp&) = default;
  friend auto operator<=>(const Exp&, const Exp&) = default;
};

// Graded lexicographic order: total degree first, then the power of q.
inline bool grlex_less(const Exp& x, const Exp& y) {
  const int dx = x.a + x.b, dy = y.a + y.b;
  if (dx != dy) return dx < dy;
  return x.a < y.a;
}

struct Term {
  Exp e;
  mpq_class c;
};

// Laurent polynomial in q, t over Q. Terms are kept in ascending grlex order.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& c);

  static LaurentPoly monomial(int a, int b, const mpq_class& c = 1);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t size() const { return terms_.size(); }
  mpq_class coeff(const Exp& e) const;
  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }

  // Componentwise minimum and maximum exponents. Zero polynomial gives {0,0}.
  Exp min_exp() const;
  Exp max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& s) { return a *= s; }

  LaurentPoly shifted(int da, int db) const;
  LaurentPoly pow(unsigned n) const;

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);
  // Total order used for containers.
  friend int compare(const LaurentPoly& x, const LaurentPoly& y);

  // Throws PoleError when a negative power meets a zero argument.
  mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

  // Terms in ascending order, e.g. "1 - q*t".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::string monomial_string(const Exp& e);
mpq_class rational_power(const mpq_class& x, int n);

}  // namespace hallpath
