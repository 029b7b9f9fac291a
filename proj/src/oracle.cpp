#include "hallpath/oracle.hpp"

#include <algorithm>

#include "hallpath/errors.hpp"

namespace hallpath {

Fingerprint eval_oracle(PolyRep<ExactField>& rep, const Expr& e, int margin) {
  Fingerprint fp;
  fp.source = e.source();
  fp.target = e.target();
  fp.margin = std::max(margin, e.margin());
  const int boxes = rep.policy().max_boxes - fp.margin;
  if (boxes < 0) return fp;
  fp.domain = enumerate_states(e.source(), boxes);
  for (const auto& s : fp.domain) {
    try {
      const auto v = rep.act(e, Vect<RatFunc>(s));
      for (const auto& [row, c] : v) fp.entries.emplace(std::make_pair(s, row), c);
    } catch (const TruncationOverflow&) {
      fp.overflowed.push_back(s);
    }
  }
  return fp;
}

Fingerprint eval_oracle(const Expr& e, const TruncationPolicy& policy, int margin) {
  PolyRep<ExactField> rep(ExactField{}, policy);
  return eval_oracle(rep, e, margin);
}

OracleDiff oracle_compare(PolyRep<ExactField>& rep, const Expr& a, const Expr& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw LevelError("cannot compare expressions with different levels");
  OracleDiff d;
  const int margin = std::max(a.margin(), b.margin());
  const int boxes = rep.policy().max_boxes - margin;
  if (boxes < 0) return d;
  const auto domain = enumerate_states(a.source(), boxes);
  d.domain_size = domain.size();
  const Expr diff = a - b;
  for (const auto& s : domain) {
    const Vect<RatFunc> v(s);
    if (rep.act(diff, v).is_zero()) continue;
    d.equal = false;
    d.witness = s.to_string();
    d.lhs = rep.act(a, v).to_string();
    d.rhs = rep.act(b, v).to_string();
    break;
  }
  return d;
}

bool oracle_equal(const Expr& a, const Expr& b, const TruncationPolicy& policy) {
  PolyRep<ExactField> rep(ExactField{}, policy);
  return oracle_compare(rep, a, b).equal;
}

}  // namespace hallpath
