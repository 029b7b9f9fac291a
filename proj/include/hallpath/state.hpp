#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hallpath/partition.hpp"

namespace hallpath {

enum class Side : std::int8_t { Plus, Minus };

// Basis vector I_{lambda, (w_k, ..., w_1)} of the level +k or -k space.
// w[0] is w_1, the most recently created marked box. Level 0 states always carry Side::Plus.
struct State {
  Side side = Side::Plus;
  Partition lambda;
  std::vector<BoxPos> w;

  static State make(Side side, Partition lambda, std::vector<BoxPos> w);
  static State level0(Partition lambda) { return make(Side::Plus, std::move(lambda), {}); }

  int k() const { return static_cast<int>(w.size()); }
  int level() const { return side == Side::Plus ? k() : -k(); }
  // |lambda| + k on the plus side, |lambda| on the minus side.
  int total_boxes() const;
  // lambda with the marked boxes added (plus) or removed (minus).
  Partition outer() const;
  std::string to_string() const;

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;
};

// Whether the state is reachable from level 0 through nonzero d+ (plus) or d- (minus) steps.
bool is_valid_state(const State& s);

// All valid states at `level` with at most `max_boxes` boxes, sorted.
std::vector<State> enumerate_states(int level, int max_boxes);

struct TruncationPolicy {
  int max_boxes = 6;
  int max_level = 3;
};

}  // namespace hallpath
