#pragma once

#include <cstddef>
#include <algorithm>
#include <numeric>
#include <vector>

namespace slcinv::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  // Dense class labels 0..k-1 in order of first appearance.
  std::vector<std::size_t> labels(std::size_t* count = nullptr) {
    std::vector<std::size_t> root_label(parent_.size(), parent_.size());
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (root_label[r] == parent_.size()) root_label[r] = next++;
      out[i] = root_label[r];
    }
    if (count) *count = next;
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace slcinv::detail
