#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallpath/ratfunc.hpp"

namespace hallpath {

enum class LetterKind : std::int8_t { Dplus, Dminus, Phi, Z, T, Tinv, Delta, DeltaStar };

struct Letter {
  LetterKind kind = LetterKind::Dplus;
  int index = 0;  // z_i, T_i, or m for Delta
  int exp = 1;    // power of z_i

  static Letter dplus() { return {LetterKind::Dplus, 0, 0}; }
  static Letter dminus() { return {LetterKind::Dminus, 0, 0}; }
  static Letter phi() { return {LetterKind::Phi, 0, 0}; }
  static Letter z(int i, int a = 1) { return {LetterKind::Z, i, a}; }
  static Letter T(int i) { return {LetterKind::T, i, 0}; }
  static Letter Tinv(int i) { return {LetterKind::Tinv, i, 0}; }
  static Letter delta(int m) { return {LetterKind::Delta, m, 0}; }
  static Letter delta_star(int m) { return {LetterKind::DeltaStar, m, 0}; }

  int level_change() const { return kind == LetterKind::Dplus ? 1 : kind == LetterKind::Dminus ? -1 : 0; }
  std::string to_string() const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letters in written order, acting right to left on a space of level `source`.
struct Word {
  std::vector<Letter> letters;
  int source = 0;

  Word() = default;
  Word(std::vector<Letter> ls, int src) : letters(std::move(ls)), source(src) {}

  int target() const;
  bool empty() const { return letters.empty(); }
  // Level of the space each letter acts on, indexed like `letters`.
  std::vector<int> source_levels() const;
  // Throws LevelError when a letter does not exist at its level.
  void validate() const;
  // Most boxes gained at any point while acting on a state (phi counted through both of its terms).
  int margin() const;
  // Lowest and highest level visited, counting the detour of each phi.
  std::pair<int, int> level_range() const;
  // Surface syntax, e.g. "1_0 d- z1^2 d+ 1_0".
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

// this after right; right.target() must equal left.source.
Word compose(const Word& left, const Word& right);

// Parses the surface syntax. The source level comes from a trailing 1_k or from `source`.
Word parse_word(const std::string& text, std::optional<int> source = std::nullopt);

// Linear combination of words sharing source and target.
class Expr {
 public:
  Expr() = default;
  Expr(int source, int target) : source_(source), target_(target) {}
  Expr(const Word& w, const RatFunc& c = RatFunc(1));  // NOLINT(google-explicit-constructor)
  static Expr identity(int level) { return Expr(Word({}, level)); }

  int source() const { return source_; }
  int target() const { return target_; }
  const std::map<Word, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int margin() const;
  std::pair<int, int> level_range() const;

  void add(const Word& w, const RatFunc& c);
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const RatFunc& c);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const RatFunc& c) { return a *= c; }
  friend Expr operator*(const RatFunc& c, Expr a) { return a *= c; }
  // Composition: a after b.
  friend Expr operator*(const Expr& a, const Expr& b);
  friend bool operator==(const Expr&, const Expr&) = default;

  std::string to_string() const;

 private:
  void check_levels(const Expr& o) const;
  int source_ = 0;
  int target_ = 0;
  std::map<Word, RatFunc> terms_;
};

Expr commutator(const Expr& a, const Expr& b);

}  // namespace hallpath
