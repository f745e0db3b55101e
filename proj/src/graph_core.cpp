#include "treeub/graph_core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

namespace treeub {

namespace {

std::string describe_edge(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

// Parent array and BFS visiting order for the tree rooted at `root`.
void bfs_order(const LabeledTree& tree, Vertex root, std::vector<Vertex>& order,
               std::vector<Vertex>& parent) {
  const Vertex n = tree.order();
  order.clear();
  order.reserve(n);
  parent.assign(n, -1);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : tree.neighbors(u)) {
      if (parent[w] == -1) {
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
}

std::string rooted_code(const LabeledTree& tree, Vertex root) {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  bfs_order(tree, root, order, parent);
  std::vector<std::vector<std::string>> child_codes(tree.order());
  std::vector<std::string> code(tree.order());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    auto& kids = child_codes[u];
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (auto& k : kids) c += k;
    c += ")";
    kids.clear();
    kids.shrink_to_fit();
    if (u != root) {
      child_codes[parent[u]].push_back(std::move(c));
    } else {
      code[u] = std::move(c);
    }
  }
  return code[root];
}

std::vector<Vertex> tree_centers(const LabeledTree& tree) {
  const Vertex n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  Vertex remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<Vertex>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : tree.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::int64_t parse_int(const std::string& token, std::string_view what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ValidationError("tree file: expected integer " + std::string(what) + ", got '" +
                          token + "'");
  }
  return value;
}

}  // namespace

LabeledTree::LabeledTree(Vertex order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ < 1 || order_ > kMaxOrder) {
    throw ValidationError("tree order must be in [1, " + std::to_string(kMaxOrder) +
                          "], got " + std::to_string(order_));
  }
  if (edges_.size() != static_cast<std::size_t>(order_ - 1)) {
    throw ValidationError("a tree of order " + std::to_string(order_) + " needs " +
                          std::to_string(order_ - 1) + " edges, got " +
                          std::to_string(edges_.size()));
  }
  adjacency_.assign(order_, {});
  for (const Edge& e : edges_) {
    const auto [u, v] = e;
    if (u < 0 || u >= order_ || v < 0 || v >= order_) {
      throw ValidationError("edge " + describe_edge(e) + " has an endpoint out of range");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < order_; ++v) {
    auto adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw ValidationError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  // n-1 edges plus connectivity rules out cycles.
  std::vector<char> seen(order_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != order_) {
    throw ValidationError("edge list is disconnected (or contains a cycle): reached " +
                          std::to_string(reached) + " of " + std::to_string(order_) +
                          " vertices");
  }
}

LabeledTree LabeledTree::relabeled(std::span<const Vertex> permutation) const {
  if (permutation.size() != static_cast<std::size_t>(order_)) {
    throw ValidationError("permutation size does not match tree order");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const auto& [u, v] : edges_) mapped.emplace_back(permutation[u], permutation[v]);
  return LabeledTree(order_, std::move(mapped));
}

DistanceMatrix all_pairs_distances(const LabeledTree& tree) {
  const Vertex n = tree.order();
  DistanceMatrix dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dist.at(s, s) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const std::int32_t du = dist(s, u);
      for (Vertex w : tree.neighbors(u)) {
        if (dist(s, w) < 0) {
          dist.at(s, w) = du + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::int64_t closer_count(const DistanceMatrix& dist, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("closer_count requires distinct vertices");
  const auto du = dist.row(u);
  const auto dv = dist.row(v);
  std::int64_t count = 0;
  for (Vertex w = 0; w < dist.order(); ++w) {
    if (du[w] < dv[w]) ++count;
  }
  return count;
}

namespace {

// |n(u,v) - n(v,u)| in a single pass over w.
std::int64_t pair_imbalance(const DistanceMatrix& dist, Vertex u, Vertex v) {
  const auto du = dist.row(u);
  const auto dv = dist.row(v);
  std::int64_t diff = 0;
  for (Vertex w = 0; w < dist.order(); ++w) {
    diff += (du[w] < dv[w]) - (dv[w] < du[w]);
  }
  return std::abs(diff);
}

}  // namespace

std::int64_t mostar_index(const LabeledTree& tree, const DistanceMatrix& dist) {
  std::int64_t total = 0;
  for (const auto& [u, v] : tree.edges()) total += pair_imbalance(dist, u, v);
  return total;
}

std::int64_t mostar_index(const LabeledTree& tree) {
  // In a tree the vertices closer to u than to a neighbour v are exactly
  // those on u's side of the edge uv, so subtree sizes suffice.
  const Vertex n = tree.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  bfs_order(tree, 0, order, parent);
  std::vector<std::int64_t> size(n, 1);
  std::int64_t total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    if (u == 0) continue;
    size[parent[u]] += size[u];
    total += std::abs(static_cast<std::int64_t>(n) - 2 * size[u]);
  }
  return total;
}

std::int64_t ub_oracle(const DistanceMatrix& dist) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < dist.order(); ++u) {
    for (Vertex v = u + 1; v < dist.order(); ++v) total += pair_imbalance(dist, u, v);
  }
  return total;
}

std::int64_t ub_oracle(const LabeledTree& tree) { return ub_oracle(all_pairs_distances(tree)); }

std::string canonical_certificate(const LabeledTree& tree) {
  const auto centers = tree_centers(tree);
  std::string best = rooted_code(tree, centers.front());
  for (std::size_t i = 1; i < centers.size(); ++i) {
    best = std::min(best, rooted_code(tree, centers[i]));
  }
  return best;
}

bool isomorphic(const LabeledTree& a, const LabeledTree& b) {
  return a.order() == b.order() && canonical_certificate(a) == canonical_certificate(b);
}

LabeledTree read_tree(std::istream& in) {
  std::vector<std::string> tokens{std::istream_iterator<std::string>(in),
                                  std::istream_iterator<std::string>()};
  if (tokens.empty()) throw ValidationError("tree file: empty input");
  const std::int64_t n = parse_int(tokens[0], "order");
  if (n < 1 || n > kMaxOrder) {
    throw ValidationError("tree file: order " + tokens[0] + " out of range");
  }
  const std::size_t expected = 1 + 2 * static_cast<std::size_t>(n - 1);
  if (tokens.size() != expected) {
    throw ValidationError("tree file: order " + std::to_string(n) + " requires " +
                          std::to_string(n - 1) + " edge lines, found " +
                          std::to_string(tokens.size() - 1) + " endpoint tokens");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    const auto u = parse_int(tokens[i], "vertex");
    const auto v = parse_int(tokens[i + 1], "vertex");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ValidationError("tree file: vertex out of range in edge " + tokens[i] + " " +
                            tokens[i + 1]);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return LabeledTree(static_cast<Vertex>(n), std::move(edges));
}

LabeledTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_tree(in);
}

void write_tree(std::ostream& out, const LabeledTree& tree) {
  out << tree.order() << '\n';
  for (const auto& [u, v] : tree.edges()) out << u << ' ' << v << '\n';
}

}  // namespace treeub
