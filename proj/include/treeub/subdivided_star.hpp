#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeub/branch_fractions.hpp"
#include "treeub/graph_core.hpp"

namespace treeub {

// Branch lengths (n_1 >= ... >= n_k >= 1) of the spider whose center leaves
// k paths of those orders when removed. Parts are sorted at construction, so
// equality, ordering and hashing act on the canonical form.
class StarSignature {
 public:
  explicit StarSignature(std::vector<int> parts);

  // Comma-separated parts, e.g. "4,3,3,2,2,1". Whitespace around parts is
  // tolerated; parts may come in any order.
  static StarSignature parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int branches() const { return static_cast<int>(parts_.size()); }
  int order() const { return order_; }

  std::string to_string() const;  // "4,3,3"
  std::string to_tuple() const;   // "(4,3,3)"

  friend bool operator==(const StarSignature&, const StarSignature&) = default;
  friend auto operator<=>(const StarSignature& a, const StarSignature& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int order_;
};

struct UbBreakdown {
  std::int64_t ub1 = 0;  // center paired with a branch vertex
  std::int64_t ub2 = 0;  // two vertices at equal depth on different branches
  std::int64_t ub3 = 0;  // two vertices on the same branch
  std::int64_t ub4 = 0;  // different branches, different depths
  std::int64_t total = 0;

  friend bool operator==(const UbBreakdown&, const UbBreakdown&) = default;
};

// Vertex 0 is the center; branch i occupies a contiguous block of vertex ids
// ordered by depth.
LabeledTree build_tree(const StarSignature& signature);

// The four-term decomposition of uB evaluated term by term, with every
// absolute value taken literally. O(k^2 n_1^2) in the worst case.
UbBreakdown ub_closed_form(const StarSignature& signature);

// Same quantity with the innermost sums of |c + t| over consecutive t done in
// O(1). `parts` must be nonincreasing and positive.
UbBreakdown ub_closed_form_fast(std::span<const int> parts);
inline UbBreakdown ub_closed_form_fast(const StarSignature& signature) {
  return ub_closed_form_fast(signature.parts());
}

// x_i = n_i / n.
BranchFractions signature_fractions(const StarSignature& signature);

// The signature of `tree` when it is a subdivided star (at most one vertex of
// degree >= 3). Paths get the most balanced two-branch split; the single
// vertex tree has no signature.
std::optional<StarSignature> star_signature_of(const LabeledTree& tree);

}  // namespace treeub

template <>
struct std::hash<treeub::StarSignature> {
  std::size_t operator()(const treeub::StarSignature& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int p : s.parts()) {
      h ^= static_cast<std::size_t>(p);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
