#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hallpath/laurent_poly.hpp"

namespace hallpath {

// Box in row `row`, column `col`, both 1-based.
struct BoxPos {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const BoxPos&, const BoxPos&) = default;
  // q^(col-1) t^(row-1).
  Exp content() const { return {col - 1, row - 1}; }
  std::string to_string() const;
};

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // 1-based; zero past the last row.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains(const BoxPos& b) const { return b.row >= 1 && b.col >= 1 && part(b.row) >= b.col; }
  std::vector<BoxPos> boxes() const;

  // Throws InvalidInput when the box is not addable/removable.
  Partition add(const BoxPos& b) const;
  Partition remove(const BoxPos& b) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// Listed top row first.
std::vector<BoxPos> addable_boxes(const Partition& lambda);
std::vector<BoxPos> removable_boxes(const Partition& mu);
bool is_addable(const Partition& lambda, const BoxPos& b);
bool is_removable(const Partition& mu, const BoxPos& b);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions of size at most n, by size.
std::vector<Partition> partitions_up_to(int n);

}  // namespace hallpath
