#pragma once

#include <gmpxx.h>

#include <string>

#include "hallpath/laurent_poly.hpp"

namespace hallpath {

// Element of Q(q,t) kept in canonical reduced form:
//   den is an integer primitive polynomial with no monomial factor whose
//   lowest grlex term is positive; gcd(num, den) = 1.
// Monomial factors and rational scalars live in num.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c);  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc q() { return monomial(1, 0); }
  static RatFunc t() { return monomial(0, 1); }
  static RatFunc monomial(int a, int b, const mpq_class& c = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inv() const;
  RatFunc pow(int n) const;

  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend int compare(const RatFunc& x, const RatFunc& y);

  // Throws PoleError when the denominator vanishes at the point.
  mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(Canonical, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalise(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

// value * q^(half/2), with half in {0, 1} after folding.
class HalfQScalar {
 public:
  HalfQScalar() = default;
  HalfQScalar(RatFunc v, int half = 0);  // NOLINT(google-explicit-constructor)

  const RatFunc& value() const { return value_; }
  bool has_half() const { return half_ != 0; }
  HalfQScalar& operator*=(const HalfQScalar& o);
  friend HalfQScalar operator*(HalfQScalar a, const HalfQScalar& b) { return a *= b; }
  friend bool operator==(const HalfQScalar&, const HalfQScalar&) = default;

  // Throws InvalidInput when a half-integral power of q remains.
  RatFunc to_ratfunc() const;
  std::string to_string() const;

 private:
  RatFunc value_;
  int half_ = 0;
};

}  // namespace hallpath
