#include "hallpath/state.hpp"

#include <set>

#include "hallpath/errors.hpp"

namespace hallpath {

State State::make(Side side, Partition lambda, std::vector<BoxPos> w) {
  State s;
  s.side = w.empty() ? Side::Plus : side;
  s.lambda = std::move(lambda);
  s.w = std::move(w);
  return s;
}

int State::total_boxes() const { return lambda.size() + (side == Side::Plus ? k() : 0); }

Partition State::outer() const {
  Partition p = lambda;
  for (int j = k() - 1; j >= 0; --j) p = side == Side::Plus ? p.add(w[j]) : p.remove(w[j]);
  return p;
}

std::string State::to_string() const {
  std::string s = side == Side::Plus ? "I" : "I-";
  s += "_{" + lambda.to_string();
  if (!w.empty()) {
    s += ",(";
    for (int j = k() - 1; j >= 0; --j) s += w[j].to_string() + (j ? "," : "");
    s += ")";
  }
  return s + "}";
}

bool is_valid_state(const State& s) {
  Partition cur = s.lambda;
  for (int j = s.k() - 1; j >= 0; --j) {
    const BoxPos& x = s.w[j];
    if (s.side == Side::Plus) {
      if (!is_addable(cur, x)) return false;
      for (int i = j + 1; i < s.k(); ++i)
        if (x.row == s.w[i].row + 1 && x.col == s.w[i].col) return false;
      cur = cur.add(x);
    } else {
      if (!is_removable(cur, x)) return false;
      for (int i = j + 1; i < s.k(); ++i)
        if (x.row == s.w[i].row - 1 && x.col == s.w[i].col) return false;
      cur = cur.remove(x);
    }
  }
  return true;
}

std::vector<State> enumerate_states(int level, int max_boxes) {
  std::set<State> cur;
  for (const auto& p : partitions_up_to(std::max(max_boxes, -1))) cur.insert(State::level0(p));
  const Side side = level >= 0 ? Side::Plus : Side::Minus;
  const int steps = level >= 0 ? level : -level;
  for (int step = 0; step < steps; ++step) {
    std::set<State> next;
    for (const auto& s : cur) {
      const Partition outer = s.outer();
      const auto cands = side == Side::Plus ? addable_boxes(outer) : removable_boxes(outer);
      for (const auto& x : cands) {
        std::vector<BoxPos> w{x};
        w.insert(w.end(), s.w.begin(), s.w.end());
        State n = State::make(side, s.lambda, std::move(w));
        if (n.total_boxes() > max_boxes) continue;
        if (!is_valid_state(n)) continue;
        next.insert(std::move(n));
      }
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

}  // namespace hallpath
