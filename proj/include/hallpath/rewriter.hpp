#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallpath/polyrep.hpp"
#include "hallpath/ratfunc.hpp"
#include "hallpath/word.hpp"

namespace hallpath {

// Hecke parameter at a level: q on the plus tower, q^-1 on the minus tower.
RatFunc hecke_parameter(int level);

// z-monomial times T_i^{-1} (or T_i) pushed to T on the left:
//   f T^{-1} = T^{-1} s_i(f) + p^-1 (1 - p) D_i(f)
//   f T      = T s_i(f) + (1 - p) (f - s_i(f) + D_i(f))
// `rest` holds the z-only remainder keyed by exponent vectors.
struct PushedThroughT {
  std::vector<int> swapped;
  std::map<std::vector<int>, RatFunc> rest;
};
PushedThroughT push_monomial_through_T(const std::vector<int>& exps, int i, bool inverse, const RatFunc& p);

// z_i^a T_i^-1 and z_{i+1}^a T_i^-1 rewritten with T_i^-1 on the left, as (lhs, rhs) identity pairs.
struct RewriteRule {
  Expr lhs;
  Expr rhs;
};
std::vector<RewriteRule> push_z_through_Tinv(int level, int i, int a);

// Rewrites a combination of z and T letters at one level into the basis T_w z^a, with w
// written as its lexicographically least reduced word.
Expr hecke_normalize(const Expr& e);

// Product of d-, phi and z letters in canonical form: all z letters pushed right except the
// z1 power sitting just left of a phi.
struct SpecialWord {
  struct Step {
    LetterKind kind = LetterKind::Dminus;  // Dminus or Phi
    int z1 = 0;                            // power of z1 immediately left of this letter
    friend auto operator<=>(const Step&, const Step&) = default;
    friend bool operator==(const Step&, const Step&) = default;
  };
  std::vector<Step> steps;
  std::vector<int> tail;  // exponents of z_1..z_k at the right end; size is the level

  int level() const { return static_cast<int>(tail.size()); }
  int measure() const { return static_cast<int>(steps.size()); }
  Word to_word() const;
  std::string to_string() const { return to_word().to_string(); }

  friend auto operator<=>(const SpecialWord&, const SpecialWord&) = default;
  friend bool operator==(const SpecialWord&, const SpecialWord&) = default;
};

// Y_{m^1} ... Y_{m^r} followed by a special word; no special word at level 0.
// A lone special word (or lone Y at level 0) is special; a nonempty Y prefix in front of
// something else makes the term factorizable.
struct NormalTerm {
  std::vector<std::vector<int>> ys;
  std::optional<SpecialWord> tail;

  int level() const { return tail ? tail->level() : 0; }
  bool is_unit() const { return ys.empty() && !tail; }
  bool is_special() const { return (ys.empty() && tail) || (ys.size() == 1 && !tail); }
  bool is_factorizable() const { return !is_unit() && !is_special(); }
  Word to_word() const;
  std::string to_string() const;

  friend auto operator<=>(const NormalTerm&, const NormalTerm&) = default;
  friend bool operator==(const NormalTerm&, const NormalTerm&) = default;
};

using NormalForm = std::map<NormalTerm, RatFunc>;

Expr to_expr(const NormalForm& nf, int level);
std::string to_string(const NormalForm& nf);

struct RewriteStats {
  long lemma_calls = 0;
  long measure_violations = 0;
  int max_depth = 0;
};

// Rewrites elements of 1_0 B 1_k (letters d+, d-, phi, z, T, T^-1 on levels >= 0) into
// combinations of special and factorizable terms.
class SpecialRewriter {
 public:
  NormalForm to_special(const Word& w);
  NormalForm to_special(const Expr& e);
  const RewriteStats& stats() const { return stats_; }

 private:
  NormalForm rmul(const NormalForm& nf, const Letter& x);
  NormalForm special_T(const SpecialWord& s, int i, bool inverse, int parent);
  NormalForm special_dplus(const SpecialWord& s, int parent);
  void enter(int measure, int parent);

  RewriteStats stats_;
  int depth_ = 0;
  std::map<std::pair<SpecialWord, int>, NormalForm> t_memo_;
  std::map<SpecialWord, NormalForm> dplus_memo_;
};

// Theta(w) = q^(half/2) * expr.
struct ThetaImage {
  Expr expr;
  int half = 0;
};
ThetaImage theta(const Word& w);
// All terms must carry the same half-integral part.
ThetaImage theta(const Expr& e);

}  // namespace hallpath
