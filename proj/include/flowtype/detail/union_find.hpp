#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace flowtype::detail {

/// Growable disjoint-set forest with path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns the surviving root; `into`'s root wins.
  std::size_t unite(std::size_t into, std::size_t other) {
    into = find(into);
    other = find(other);
    parent_[other] = into;
    return into;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace flowtype::detail
