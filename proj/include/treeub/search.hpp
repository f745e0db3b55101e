#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "treeub/graph_core.hpp"
#include "treeub/subdivided_star.hpp"

namespace treeub {

// Streams the partitions of `total` with every part <= `max_part` in
// reverse-lexicographic order: (total), ..., (1, ..., 1).
class PartitionStream {
 public:
  explicit PartitionStream(int total) : PartitionStream(total, total) {}
  PartitionStream(int total, int max_part);

  // Current partition; valid until the next call to advance().
  std::span<const int> current() const { return parts_; }
  bool done() const { return done_; }
  void advance();

 private:
  std::vector<int> parts_;
  bool done_ = false;
};

// Every signature of order n (the partitions of n-1), each exactly once.
std::vector<StarSignature> enumerate_signatures(int n);
void for_each_signature(int n, const std::function<void(std::span<const int>)>& visit);

// Number of partitions of m, by the Euler pentagonal recurrence.
std::int64_t partition_count(int m);

struct MaximizerRecord {
  int order = 0;
  std::int64_t max_ub = 0;
  std::vector<StarSignature> witnesses;  // lexicographically descending
};

struct SearchOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

// Exhaustive maximum of uB over subdivided stars of order n (n >= 2) with
// the complete tie set. Work is split by the largest part; the reduction is
// deterministic regardless of thread count.
MaximizerRecord max_ub_subdivided_stars(int n, SearchOptions options = {});

inline constexpr int kFreeTreeCap = 16;
inline constexpr int kAllTreesCap = 15;

// One tree per isomorphism class on n vertices (1 <= n <= cap). Generated in
// canonical level-sequence form (Wright, Richmond, Odlyzko and McKay), so the
// cost per tree is amortized constant apart from building the tree itself.
void for_each_free_tree(int n, const std::function<void(const LabeledTree&)>& visit,
                        int cap = kFreeTreeCap);
std::vector<LabeledTree> enumerate_free_trees(int n, int cap = kFreeTreeCap);

struct AllTreesRecord {
  int order = 0;
  std::int64_t max_ub = 0;
  std::vector<LabeledTree> witnesses;  // one per isomorphism class
};

// Maximum of uB over all trees of order n, 4 <= n <= kAllTreesCap.
AllTreesRecord max_ub_all_trees(int n);

struct DominanceReport {
  bool holds = false;
  MaximizerRecord stars;
  AllTreesRecord all_trees;
  // star_signature_of() for each all-trees witness, when it is a star.
  std::vector<StarSignature> witness_signatures;
};

// Whether every uB-maximizing tree of order n is a subdivided star and the
// star maximum equals the all-trees maximum, 4 <= n <= kAllTreesCap.
DominanceReport dominance_report(int n, SearchOptions options = {});
bool verify_dominance(int n);

}  // namespace treeub
