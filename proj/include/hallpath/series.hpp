#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hallpath/ratfunc.hpp"

namespace hallpath {

// Truncated power series: coefficient of x^i at index i.
using Series = std::vector<RatFunc>;

Series series_mul(const Series& a, const Series& b, int order);
Series series_div(const Series& a, const Series& b, int order);
// exp of a series with zero constant term, via n E_n = sum m l_m E_{n-m}.
Series series_exp(const Series& log, int order);

// Laurent polynomial in one auxiliary variable with coefficients in Q(q,t).
class AuxPoly {
 public:
  AuxPoly() = default;
  AuxPoly(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  static AuxPoly var(int power = 1, const RatFunc& c = RatFunc(1));

  const std::map<int, RatFunc>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int low() const;
  int high() const;
  RatFunc coeff(int k) const;

  AuxPoly& operator+=(const AuxPoly& o);
  AuxPoly& operator-=(const AuxPoly& o);
  friend AuxPoly operator+(AuxPoly a, const AuxPoly& b) { return a += b; }
  friend AuxPoly operator-(AuxPoly a, const AuxPoly& b) { return a -= b; }
  friend AuxPoly operator*(const AuxPoly& a, const AuxPoly& b);
  friend bool operator==(const AuxPoly&, const AuxPoly&) = default;

  std::string to_string(const std::string& var = "z") const;

 private:
  void add_term(int k, const RatFunc& v);
  std::map<int, RatFunc> c_;
};

struct AuxRatFunc {
  AuxPoly num;
  AuxPoly den;
};

enum class ExpandAt { Zero, Infinity };

// Coefficients c_0..c_order with f = sum c_j x^j (at zero) or sum c_j x^-j (at infinity).
// Throws PoleError when f has a pole at the expansion point.
Series series_expand(const AuxRatFunc& f, ExpandAt at, int order);

// Laurent polynomial in two auxiliary variables (z, w) over Q(q,t).
class BivarPoly {
 public:
  using Key = std::pair<int, int>;
  BivarPoly() = default;
  static BivarPoly monomial(int i, int j, const RatFunc& c = RatFunc(1));

  const std::map<Key, RatFunc>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(int i, int j) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const RatFunc& s);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const RatFunc& s) { return a *= s; }
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  // Exchanges the two variables.
  BivarPoly swapped() const;
  RatFunc eval(const RatFunc& z, const RatFunc& w) const;
  std::string to_string(const std::string& x = "z", const std::string& y = "w") const;

 private:
  void add_term(const Key& k, const RatFunc& v);
  std::map<Key, RatFunc> c_;
};

// g(z,w) = (z - q w)(z - t w)(z - q^-1 t^-1 w).
BivarPoly g_poly();

// sigma1 = q + t + q^-1 t^-1, sigma2 = q t + q^-1 + t^-1.
RatFunc sigma1();
RatFunc sigma2();

}  // namespace hallpath
