#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treeub {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// uB(T) < n^3 / 2, so 64-bit counts cannot overflow below n = 2e6. The API
// caps orders well below that.
inline constexpr Vertex kMaxOrder = 100000;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tree on vertices {0, ..., n-1}. Construction validates the edge list:
// exactly n-1 edges, endpoints in range, no loops or duplicates, connected.
class LabeledTree {
 public:
  LabeledTree(Vertex order, std::vector<Edge> edges);

  Vertex order() const { return order_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  // Same tree with vertex v renamed to permutation[v].
  LabeledTree relabeled(std::span<const Vertex> permutation) const;

 private:
  Vertex order_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Dense hop-count matrix, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Vertex order)
      : order_(order),
        dist_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), -1) {}

  Vertex order() const { return order_; }
  std::int32_t operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  std::int32_t& at(Vertex u, Vertex v) { return dist_[index(u, v)]; }
  std::span<const std::int32_t> row(Vertex u) const {
    return {dist_.data() + index(u, 0), static_cast<std::size_t>(order_)};
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(v);
  }

  Vertex order_;
  std::vector<std::int32_t> dist_;
};

// BFS from every vertex.
DistanceMatrix all_pairs_distances(const LabeledTree& tree);

// |{w : dist(u,w) < dist(v,w)}|. Counts u itself; equidistant vertices count
// for neither side. Throws std::invalid_argument when u == v.
std::int64_t closer_count(const DistanceMatrix& dist, Vertex u, Vertex v);

// Mostar index. The one-argument form uses subtree sizes (O(n)); the
// two-argument form sums |n(u,v) - n(v,u)| over edges from the matrix.
std::int64_t mostar_index(const LabeledTree& tree);
std::int64_t mostar_index(const LabeledTree& tree, const DistanceMatrix& dist);

// Distance-unbalancedness by direct summation over all unordered pairs.
// O(n^3) time, O(n^2) memory; meant for small trees.
std::int64_t ub_oracle(const LabeledTree& tree);
std::int64_t ub_oracle(const DistanceMatrix& dist);

// n(n-1)(n-2)/2, the trivial upper bound on uB of any tree of order n.
constexpr std::int64_t ub_upper_bound(std::int64_t n) {
  return n < 2 ? 0 : n * (n - 1) * (n - 2) / 2;
}

// Isomorphism certificate: two trees get the same string iff they are
// isomorphic. AHU encoding rooted at the center (bicentral trees take the
// smaller of the two rootings).
std::string canonical_certificate(const LabeledTree& tree);
bool isomorphic(const LabeledTree& a, const LabeledTree& b);

// Text format: first line `n`, then n-1 lines `u v`.
LabeledTree read_tree(std::istream& in);
LabeledTree parse_tree(std::string_view text);
void write_tree(std::ostream& out, const LabeledTree& tree);

}  // namespace treeub
