#include "treeub/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace treeub {

PartitionStream::PartitionStream(int total, int max_part) {
  if (total < 0) throw ValidationError("cannot partition a negative number");
  if (max_part < 1 && total > 0) throw ValidationError("max_part must be positive");
  const int m = std::min(max_part, std::max(total, 1));
  int rem = total;
  while (rem > 0) {
    const int part = std::min(m, rem);
    parts_.push_back(part);
    rem -= part;
  }
}

void PartitionStream::advance() {
  if (done_) return;
  int i = static_cast<int>(parts_.size()) - 1;
  while (i >= 0 && parts_[i] == 1) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  int rem = static_cast<int>(parts_.size()) - i;  // trailing ones plus the unit taken from parts_[i]
  const int v = --parts_[i];
  parts_.resize(i + 1);
  while (rem > 0) {
    const int part = std::min(v, rem);
    parts_.push_back(part);
    rem -= part;
  }
}

void for_each_signature(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 2) throw ValidationError("signatures need order >= 2, got " + std::to_string(n));
  for (PartitionStream ps(n - 1); !ps.done(); ps.advance()) visit(ps.current());
}

std::vector<StarSignature> enumerate_signatures(int n) {
  std::vector<StarSignature> out;
  for_each_signature(n, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

std::int64_t partition_count(int m) {
  if (m < 0) return 0;
  std::vector<std::int64_t> p(m + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= m; ++i) {
    std::int64_t acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      if (g1 > i) break;
      const int sign = (j % 2 == 1) ? 1 : -1;
      acc += sign * p[i - g1];
      const int g2 = j * (3 * j + 1) / 2;
      if (g2 <= i) acc += sign * p[i - g2];
    }
    p[i] = acc;
  }
  return p[m];
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct LocalBest {
  std::int64_t max_ub = -1;
  std::vector<std::vector<int>> witnesses;

  void offer(std::int64_t value, std::span<const int> parts) {
    if (value < max_ub) return;
    if (value > max_ub) {
      max_ub = value;
      witnesses.clear();
    }
    witnesses.emplace_back(parts.begin(), parts.end());
  }
};

}  // namespace

MaximizerRecord max_ub_subdivided_stars(int n, SearchOptions options) {
  if (n < 2 || n > kMaxOrder) {
    throw ValidationError("star search needs 2 <= n <= " + std::to_string(kMaxOrder));
  }
  const int total = n - 1;
  const unsigned workers = std::min<unsigned>(resolve_threads(options.threads), total);
  std::vector<LocalBest> best(workers);
  std::atomic<int> next_first{total};

  auto work = [&](unsigned id) {
    std::vector<int> buffer;
    buffer.reserve(total);
    for (int first = next_first--; first >= 1; first = next_first--) {
      for (PartitionStream rest(total - first, first); !rest.done(); rest.advance()) {
        buffer.assign(1, first);
        const auto tail = rest.current();
        buffer.insert(buffer.end(), tail.begin(), tail.end());
        best[id].offer(ub_closed_form_fast(buffer).total, buffer);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  MaximizerRecord record;
  record.order = n;
  record.max_ub = -1;
  for (const auto& b : best) record.max_ub = std::max(record.max_ub, b.max_ub);
  for (auto& b : best) {
    if (b.max_ub != record.max_ub) continue;
    for (auto& parts : b.witnesses) record.witnesses.emplace_back(std::move(parts));
  }
  std::sort(record.witnesses.begin(), record.witnesses.end(), std::greater<>());
  return record;
}

namespace {

// Level-sequence machinery for free-tree generation. A layout lists vertex
// depths in preorder of a rooted tree; the root has depth 0.

// Next rooted tree in reverse order; empty when exhausted. When p < 0 the
// pivot is the last entry that is not 1.
std::vector<int> next_rooted_tree(const std::vector<int>& layout, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(layout.size()) - 1;
    while (layout[p] == 1) --p;
  }
  if (p == 0) return {};
  int q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  std::vector<int> result = layout;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits at the root's second child: the first subtree (depths shifted up
// by one) and the remaining tree with its root.
void split_tree(const std::vector<int>& layout, std::vector<int>& left, std::vector<int>& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Returns `candidate` if it is the canonical centered layout of a free tree,
// otherwise jumps ahead to the next candidate worth testing.
std::vector<int> next_tree(std::vector<int> candidate) {
  std::vector<int> left;
  std::vector<int> rest;
  split_tree(candidate, left, rest);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const int p = static_cast<int>(left.size());
  std::vector<int> fresh = next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    split_tree(fresh, left, rest);
    const int new_left_height = *std::max_element(left.begin(), left.end());
    const int len = new_left_height + 1;
    for (int s = 1; s <= len; ++s) fresh[fresh.size() - len + s - 1] = s;
  }
  return fresh;
}

LabeledTree layout_to_tree(const std::vector<int>& layout) {
  const int n = static_cast<int>(layout.size());
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<Vertex> last_at_depth(n + 1, -1);
  last_at_depth[0] = 0;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(last_at_depth[layout[i] - 1], i);
    last_at_depth[layout[i]] = i;
  }
  return LabeledTree(n, std::move(edges));
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const LabeledTree&)>& visit, int cap) {
  if (n < 1) throw ValidationError("tree order must be positive");
  if (n > cap) {
    throw ValidationError("free-tree enumeration capped at n = " + std::to_string(cap) +
                          ", got " + std::to_string(n));
  }
  if (n == 1) {
    visit(LabeledTree(1, {}));
    return;
  }
  // Start from the path rooted at its center.
  std::vector<int> layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  while (!layout.empty()) {
    layout = next_tree(std::move(layout));
    if (layout.empty()) break;
    visit(layout_to_tree(layout));
    layout = next_rooted_tree(layout);
  }
}

std::vector<LabeledTree> enumerate_free_trees(int n, int cap) {
  std::vector<LabeledTree> out;
  for_each_free_tree(n, [&](const LabeledTree& t) { out.push_back(t); }, cap);
  return out;
}

AllTreesRecord max_ub_all_trees(int n) {
  if (n < 4 || n > kAllTreesCap) {
    throw ValidationError("all-trees search needs 4 <= n <= " + std::to_string(kAllTreesCap) +
                          ", got " + std::to_string(n));
  }
  AllTreesRecord record;
  record.order = n;
  record.max_ub = -1;
  for_each_free_tree(n, [&](const LabeledTree& t) {
    const std::int64_t ub = ub_oracle(t);
    if (ub < record.max_ub) return;
    if (ub > record.max_ub) {
      record.max_ub = ub;
      record.witnesses.clear();
    }
    record.witnesses.push_back(t);
  });
  return record;
}

DominanceReport dominance_report(int n, SearchOptions options) {
  DominanceReport report;
  report.all_trees = max_ub_all_trees(n);
  report.stars = max_ub_subdivided_stars(n, options);
  bool all_stars = true;
  for (const auto& t : report.all_trees.witnesses) {
    if (auto sig = star_signature_of(t)) {
      report.witness_signatures.push_back(*sig);
    } else {
      all_stars = false;
    }
  }
  std::sort(report.witness_signatures.begin(), report.witness_signatures.end(), std::greater<>());
  report.holds = all_stars && report.all_trees.max_ub == report.stars.max_ub &&
                 report.witness_signatures == report.stars.witnesses;
  return report;
}

bool verify_dominance(int n) { return dominance_report(n).holds; }

}  // namespace treeub
