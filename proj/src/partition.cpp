#include "hallpath/partition.hpp"

#include <functional>

#include "hallpath/errors.hpp"

namespace hallpath {

std::string BoxPos::to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<BoxPos> Partition::boxes() const {
  std::vector<BoxPos> v;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) v.push_back({i, j});
  return v;
}

Partition Partition::add(const BoxPos& b) const {
  if (!is_addable(*this, b)) throw InvalidInput("box " + b.to_string() + " is not addable to " + to_string());
  Partition r = *this;
  if (b.row > length())
    r.parts_.push_back(1);
  else
    ++r.parts_[b.row - 1];
  return r;
}

Partition Partition::remove(const BoxPos& b) const {
  if (!is_removable(*this, b)) throw InvalidInput("box " + b.to_string() + " is not removable from " + to_string());
  Partition r = *this;
  if (--r.parts_[b.row - 1] == 0) r.parts_.pop_back();
  return r;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

std::vector<BoxPos> addable_boxes(const Partition& lambda) {
  std::vector<BoxPos> v;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (i == 1 || lambda.part(i - 1) > lambda.part(i)) v.push_back({i, lambda.part(i) + 1});
  return v;
}

std::vector<BoxPos> removable_boxes(const Partition& mu) {
  std::vector<BoxPos> v;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > mu.part(i + 1)) v.push_back({i, mu.part(i)});
  return v;
}

bool is_addable(const Partition& lambda, const BoxPos& b) {
  if (b.row < 1 || b.col < 1) return false;
  return lambda.part(b.row) == b.col - 1 && (b.row == 1 || lambda.part(b.row - 1) >= b.col);
}

bool is_removable(const Partition& mu, const BoxPos& b) {
  if (b.row < 1 || b.col < 1) return false;
  return mu.part(b.row) == b.col && mu.part(b.row + 1) < b.col;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  return out;
}

}  // namespace hallpath
