#pragma once

// Independent reference computations and generators shared by the test
// suites. Nothing here calls into the code paths it is used to check.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "treeub/graph_core.hpp"

namespace treeub::testing {

// Uniform random labeled tree from a random Pruefer sequence.
inline LabeledTree random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return LabeledTree(1, {});
  if (n == 2) return LabeledTree(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  }
  return LabeledTree(n, std::move(edges));
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Rooted unlabeled trees r(1..m) via r(n+1) = (1/n) sum_{k=1}^n
// (sum_{d|k} d r(d)) r(n-k+1), then free trees by Otter's dissimilarity
// formula t(n) = r(n) - (1/2)(sum_{i+j=n} r(i) r(j) - [n even] r(n/2)).
inline std::vector<std::int64_t> rooted_tree_counts(int m) {
  std::vector<std::int64_t> r(m + 1, 0);
  if (m >= 1) r[1] = 1;
  for (int n = 1; n < m; ++n) {
    std::int64_t acc = 0;
    for (int k = 1; k <= n; ++k) {
      std::int64_t s = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) s += d * r[d];
      }
      acc += s * r[n - k + 1];
    }
    r[n + 1] = acc / n;
  }
  return r;
}

inline std::int64_t free_tree_count(int n) {
  if (n <= 1) return 1;
  const auto r = rooted_tree_counts(n);
  std::int64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  if (n % 2 == 0) pairs -= r[n / 2];
  return r[n] - pairs / 2;
}

// Partitions of m into parts <= cap by the plain two-way recursion.
inline std::int64_t partitions_brute(int m, int cap) {
  if (m == 0) return 1;
  if (cap == 0) return 0;
  std::int64_t total = 0;
  for (int first = std::min(m, cap); first >= 1; --first) total += partitions_brute(m - first, first);
  return total;
}

}  // namespace treeub::testing
