#pragma once
// Dense integer polynomials used internally for gcd and exact division.

#include <gmpxx.h>

#include <vector>

namespace hallpath::detail {

// Univariate: coefficient of x^i at index i, no trailing zeros.
using ZPoly1 = std::vector<mpz_class>;

// Bivariate: c[j] is the coefficient of t^j, itself a polynomial in q.
using ZPoly2 = std::vector<ZPoly1>;

void trim(ZPoly1& p);
void trim(ZPoly2& p);

mpz_class content(const ZPoly1& p);
mpz_class content(const ZPoly2& p);
mpz_class max_norm(const ZPoly1& p);
mpz_class max_norm(const ZPoly2& p);

ZPoly1 mul(const ZPoly1& a, const ZPoly1& b);
ZPoly2 mul(const ZPoly2& a, const ZPoly2& b);

// Exact division; returns false when b does not divide a.
bool div_exact(const ZPoly1& a, const ZPoly1& b, ZPoly1& out);
bool div_exact(const ZPoly2& a, const ZPoly2& b, ZPoly2& out);

// Greatest common divisor with positive leading coefficient.
ZPoly1 gcd(const ZPoly1& a, const ZPoly1& b);
// Greatest common divisor, sign normalised.
ZPoly2 gcd(const ZPoly2& a, const ZPoly2& b);

// Fallback path only, exposed for tests.
ZPoly2 gcd_prs(const ZPoly2& a, const ZPoly2& b);

bool is_one(const ZPoly2& p);

}  // namespace hallpath::detail
