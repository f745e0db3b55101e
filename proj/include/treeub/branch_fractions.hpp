#pragma once

#include <span>
#include <vector>

namespace treeub {

// A point of the continuous search space: x_1 >= ... >= x_k, each in [0, 1],
// sum at most 1. Input order does not matter; the constructor sorts.
class BranchFractions {
 public:
  static constexpr double kSumSlack = 1e-12;

  explicit BranchFractions(std::vector<double> x);

  std::span<const double> values() const { return x_; }
  int size() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_[i]; }
  double sum() const;

 private:
  std::vector<double> x_;
};

}  // namespace treeub
