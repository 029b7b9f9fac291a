#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hallpath/coefficients.hpp"
#include "hallpath/field.hpp"
#include "hallpath/state.hpp"
#include "hallpath/vect.hpp"
#include "hallpath/word.hpp"

namespace hallpath {

// Eigenvalue of Delta_{p_m} (m > 0) or DeltaStar_{p_|m|} (m < 0) on a basis state.
RatFunc delta_eigenvalue(const State& s, int m);

// The polynomial representation on the plus and minus towers.
// Holds caches, so one instance should not be shared across threads.
template <class F>
class PolyRep {
 public:
  using S = typename F::Scalar;
  using V = Vect<S>;

  explicit PolyRep(F field = F{}, TruncationPolicy policy = {});

  const F& field() const { return field_; }
  const TruncationPolicy& policy() const { return policy_; }
  S lift(const RatFunc& r) const { return field_.lift(r); }

  // Single letter on a single state; throws TruncationOverflow past the box cap.
  const V& act(const Letter& x, const State& s);
  V act(const Letter& x, const V& v);
  V act(const Word& w, const V& v);
  V act(const Expr& e, const V& v);

  // Memoised box coefficients.
  const RatFunc& c(const Partition& lambda, const BoxPos& x);
  const RatFunc& cstar(const Partition& mu, const BoxPos& x);

 private:
  V compute(const Letter& x, const State& s);
  V act_dplus(const State& s);
  V act_dminus(const State& s);
  V act_T(const State& s, int i, bool inverse);
  void check_cap(const State& s) const;

  F field_;
  TruncationPolicy policy_;
  std::map<std::pair<State, Letter>, V> cache_;
  std::map<std::pair<Partition, BoxPos>, RatFunc> c_cache_, cstar_cache_;
};

extern template class PolyRep<ExactField>;
extern template class PolyRep<PointField>;

}  // namespace hallpath
