#include "treeub/subdivided_star.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace treeub {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// sum_{s=lo}^{hi} |s|
constexpr std::int64_t abs_run(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) return 0;
  if (lo >= 0) return (lo + hi) * (hi - lo + 1) / 2;
  if (hi <= 0) return (-lo - hi) * (hi - lo + 1) / 2;
  return hi * (hi + 1) / 2 + (-lo) * (-lo + 1) / 2;
}

void check_parts(std::span<const int> parts) {
  if (parts.empty()) throw ValidationError("signature needs at least one branch");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ValidationError("signature parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw ValidationError("signature parts must be nonincreasing");
    }
  }
}

}  // namespace

StarSignature::StarSignature(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("signature needs at least one branch");
  std::int64_t sum = 1;
  for (int p : parts_) {
    if (p < 1) throw ValidationError("signature parts must be positive, got " + std::to_string(p));
    sum += p;
  }
  if (sum > kMaxOrder) {
    throw ValidationError("signature order " + std::to_string(sum) + " exceeds " +
                          std::to_string(kMaxOrder));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  order_ = static_cast<int>(sum);
}

StarSignature StarSignature::parse(std::string_view text) {
  std::vector<int> parts;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto token = trim(rest.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ValidationError("bad signature '" + std::string(text) +
                            "': expected comma-separated positive integers");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return StarSignature(std::move(parts));
}

std::string StarSignature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string StarSignature::to_tuple() const { return "(" + to_string() + ")"; }

LabeledTree build_tree(const StarSignature& signature) {
  std::vector<Edge> edges;
  edges.reserve(signature.order() - 1);
  Vertex next = 1;
  for (int length : signature.parts()) {
    Vertex prev = 0;
    for (int depth = 1; depth <= length; ++depth) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return LabeledTree(signature.order(), std::move(edges));
}

UbBreakdown ub_closed_form(const StarSignature& signature) {
  const auto p = signature.parts();
  const std::int64_t n = signature.order();
  const int k = signature.branches();
  UbBreakdown b;
  for (int i = 0; i < k; ++i) {
    const std::int64_t ni = p[i];
    for (std::int64_t d = 1; d <= ni; ++d) b.ub1 += std::abs(n - 2 * ni - 1 + d);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) b.ub2 += static_cast<std::int64_t>(p[i] - p[j]) * p[j];
  }
  for (int i = 0; i < k; ++i) {
    const std::int64_t ni = p[i];
    for (std::int64_t d = 1; d <= ni - 1; ++d) {
      for (std::int64_t dd = 1; dd <= ni - d; ++dd) b.ub3 += std::abs(n - 2 * ni - 1 + 2 * d + dd);
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::int64_t ni = p[i];
      const std::int64_t nj = p[j];
      for (std::int64_t dj = 1; dj <= std::min(nj, ni - 1); ++dj) {
        for (std::int64_t di = dj + 1; di <= ni; ++di) b.ub4 += std::abs(n - 2 * ni - 1 + di - dj);
      }
      for (std::int64_t di = 1; di <= nj - 1; ++di) {
        for (std::int64_t dj = di + 1; dj <= nj; ++dj) b.ub4 += std::abs(n - 2 * nj - 1 + dj - di);
      }
    }
  }
  b.total = b.ub1 + b.ub2 + b.ub3 + b.ub4;
  return b;
}

UbBreakdown ub_closed_form_fast(std::span<const int> parts) {
  check_parts(parts);
  const std::int64_t n = 1 + std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  const auto k = parts.size();
  UbBreakdown b;
  // Second half of each cross-branch term (deeper vertex on branch j) depends
  // on n_j alone.
  std::vector<std::int64_t> tail(k, 0);
  for (std::size_t idx = 0; idx < k; ++idx) {
    const std::int64_t ni = parts[idx];
    const std::int64_t c = n - 2 * ni - 1;
    b.ub1 += abs_run(c + 1, c + ni);
    for (std::int64_t d = 1; d <= ni - 1; ++d) b.ub3 += abs_run(c + 2 * d + 1, c + ni + d);
    for (std::int64_t di = 1; di <= ni - 1; ++di) tail[idx] += abs_run(c + 1, c + ni - di);
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t ni = parts[i];
    const std::int64_t ci = n - 2 * ni - 1;
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::int64_t nj = parts[j];
      b.ub2 += (ni - nj) * nj;
      const std::int64_t m = std::min(nj, ni - 1);
      for (std::int64_t dj = 1; dj <= m; ++dj) b.ub4 += abs_run(ci + 1, ci + ni - dj);
      b.ub4 += tail[j];
    }
  }
  b.total = b.ub1 + b.ub2 + b.ub3 + b.ub4;
  return b;
}

BranchFractions signature_fractions(const StarSignature& signature) {
  std::vector<double> x;
  x.reserve(signature.branches());
  const double n = signature.order();
  for (int p : signature.parts()) x.push_back(static_cast<double>(p) / n);
  return BranchFractions(std::move(x));
}

std::optional<StarSignature> star_signature_of(const LabeledTree& tree) {
  const Vertex n = tree.order();
  if (n < 2) return std::nullopt;
  Vertex center = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) >= 3) {
      if (center >= 0) return std::nullopt;
      center = v;
    }
  }
  if (center < 0) {
    const int rest = n - 1;
    std::vector<int> parts{(rest + 1) / 2};
    if (rest / 2 > 0) parts.push_back(rest / 2);
    return StarSignature(std::move(parts));
  }
  std::vector<int> parts;
  for (Vertex start : tree.neighbors(center)) {
    int length = 1;
    Vertex prev = center;
    Vertex cur = start;
    while (tree.degree(cur) == 2) {
      const auto nb = tree.neighbors(cur);
      const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
      ++length;
    }
    parts.push_back(length);
  }
  return StarSignature(std::move(parts));
}

}  // namespace treeub
