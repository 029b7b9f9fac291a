#pragma once

#include <gmpxx.h>

#include <string>

#include "hallpath/ratfunc.hpp"

namespace hallpath {

// Exact evaluation in Q(q,t).
struct ExactField {
  using Scalar = RatFunc;
  Scalar lift(const RatFunc& r) const { return r; }
  std::string name() const { return "exact"; }
};

// Evaluation at a fixed rational point (q0, t0).
struct PointField {
  using Scalar = mpq_class;
  mpq_class q0{3, 7};
  mpq_class t0{-5, 11};
  // Throws PoleError when r has a pole at the point.
  Scalar lift(const RatFunc& r) const { return r.eval(q0, t0); }
  std::string name() const { return "point(q=" + q0.get_str() + ",t=" + t0.get_str() + ")"; }
};

inline bool scalar_is_zero(const RatFunc& s) { return s.is_zero(); }
inline bool scalar_is_zero(const mpq_class& s) { return s == 0; }
inline std::string scalar_string(const RatFunc& s) { return s.to_string(); }
inline std::string scalar_string(const mpq_class& s) { return s.get_str(); }

}  // namespace hallpath
