#pragma once

#include <map>

#include "hallpath/laurent_poly.hpp"
#include "hallpath/partition.hpp"
#include "hallpath/ratfunc.hpp"

namespace hallpath {

// Multiset of monomials q^i t^j with integer multiplicities.
using QTCharge = std::map<Exp, long>;

// Throws InvalidInput on non-integer coefficients.
QTCharge charge_of(const LaurentPoly& p);

// prod (1 - q^i t^j)^phi_ij. A positive multiplicity at q^0 t^0 gives zero,
// a negative one throws PoleError.
RatFunc lambda_genus(const QTCharge& phi);

RatFunc content_of(const BoxPos& b);
// Sum of box contents; dual=true uses inverted contents.
LaurentPoly box_sum(const Partition& lambda, bool dual = false);

// Coefficient c(lambda; x) for x addable to lambda.
RatFunc c_lambda_form(const Partition& lambda, const BoxPos& x);
RatFunc c_product_form(const Partition& lambda, const BoxPos& x);
// Both forms, throws ConsistencyError if they differ.
RatFunc c_coeff(const Partition& lambda, const BoxPos& x);

// Coefficient c*(mu; x) for x removable from mu.
RatFunc cstar_lambda_form(const Partition& mu, const BoxPos& x);
RatFunc cstar_product_form(const Partition& mu, const BoxPos& x);
// The product form: the normalization of the f action. The Lambda form differs from it by (1-qt)/(1-qt x).
RatFunc cstar_coeff(const Partition& mu, const BoxPos& x);

RatFunc d_lambda(const Partition& lambda);

struct IdentitySides {
  RatFunc lhs;
  RatFunc rhs;
  bool holds() const { return lhs == rhs; }
};

// c(l;x)c(l+x;y) / (c(l;y)c(l+y;x)) against its closed form.
IdentitySides monodromy(const Partition& lambda, const BoxPos& x, const BoxPos& y);
// c*(m;x)c*(m-x;y) / (c*(m;y)c*(m-y;x)) against its closed form.
IdentitySides dual_monodromy(const Partition& mu, const BoxPos& x, const BoxPos& y);
// c(l;x)/c*(l+x;x) against -(1-q)(1-t) d_mu / ((1-qt) d_l).
IdentitySides coefficient_ratio(const Partition& lambda, const BoxPos& x);

}  // namespace hallpath
