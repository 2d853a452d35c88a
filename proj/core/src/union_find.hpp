#pragma once

#include <numeric>
#include <vector>

namespace knotguts::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --sets_;
    return true;
  }

  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  int sets_;
};

}  // namespace knotguts::detail
