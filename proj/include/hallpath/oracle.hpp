#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hallpath/polyrep.hpp"

namespace hallpath {

// Matrix of an expression on the truncated basis: column = domain state, row = output state.
struct Fingerprint {
  int source = 0;
  int target = 0;
  int margin = 0;
  std::vector<State> domain;
  std::map<std::pair<State, State>, RatFunc> entries;  // (column, row) -> coefficient
  std::vector<State> overflowed;                       // columns whose image left the truncation

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Domain: all states at e.source() with at most max_boxes - margin boxes, where margin is the
// larger of e.margin() and `margin`.
Fingerprint eval_oracle(PolyRep<ExactField>& rep, const Expr& e, int margin = 0);
Fingerprint eval_oracle(const Expr& e, const TruncationPolicy& policy, int margin = 0);

// First column on which a and b differ, if any, over the domain fitting both margins.
struct OracleDiff {
  bool equal = true;
  size_t domain_size = 0;
  std::string witness;
  std::string lhs;
  std::string rhs;
};
OracleDiff oracle_compare(PolyRep<ExactField>& rep, const Expr& a, const Expr& b);
bool oracle_equal(const Expr& a, const Expr& b, const TruncationPolicy& policy);

}  // namespace hallpath
