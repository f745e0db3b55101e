#include <doctest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "treeub/graph_core.hpp"

using namespace treeub;

namespace {

LabeledTree path(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return LabeledTree(n, edges);
}

LabeledTree star(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return LabeledTree(n, edges);
}

// S(2,1,1): center 0, branch 0-1-2, leaves 3 and 4.
LabeledTree spider211() { return LabeledTree(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}}); }

}  // namespace

TEST_CASE("all_pairs_distances on small trees") {
  const auto p3 = all_pairs_distances(path(3));
  CHECK(p3(0, 2) == 2);
  CHECK(p3(2, 0) == 2);

  const auto k13 = all_pairs_distances(star(4));
  CHECK(k13(1, 2) == 2);
  CHECK(k13(0, 3) == 1);

  const auto s = all_pairs_distances(spider211());
  CHECK(s(2, 3) == 3);
  CHECK(s(2, 4) == 3);
  CHECK(s(3, 4) == 2);
}

TEST_CASE("closer_count counts strict wins only") {
  const auto p3 = all_pairs_distances(path(3));
  CHECK(closer_count(p3, 0, 1) == 1);
  CHECK(closer_count(p3, 1, 0) == 2);
  // a and c tie on b
  CHECK(closer_count(p3, 0, 2) == 1);

  const auto p2 = all_pairs_distances(path(2));
  CHECK(closer_count(p2, 0, 1) == 1);
  CHECK(closer_count(p2, 1, 0) == 1);

  const auto k13 = all_pairs_distances(star(4));
  CHECK(closer_count(k13, 0, 1) == 3);
  CHECK(closer_count(k13, 1, 0) == 1);

  CHECK_THROWS_AS(closer_count(p3, 1, 1), std::invalid_argument);
}

TEST_CASE("mostar index examples") {
  CHECK(mostar_index(path(2)) == 0);
  CHECK(mostar_index(star(4)) == 6);
  CHECK(mostar_index(path(3)) == 2);
  CHECK(mostar_index(path(1)) == 0);
}

TEST_CASE("ub_oracle examples") {
  CHECK(ub_oracle(path(1)) == 0);
  CHECK(ub_oracle(path(2)) == 0);
  CHECK(ub_oracle(path(3)) == 2);
  CHECK(ub_oracle(star(4)) == 6);
  CHECK(ub_oracle(spider211()) == 16);
}

TEST_CASE("uB of the star K_{1,n-1} is (n-1)(n-2)") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(ub_oracle(star(n)) == static_cast<std::int64_t>(n - 1) * (n - 2));
  }
}

TEST_CASE("random-tree properties") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const auto t = testing::random_tree(n, rng);
    CAPTURE(n);
    const auto d = all_pairs_distances(t);
    for (Vertex u = 0; u < n; ++u) {
      CHECK(d(u, u) == 0);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(d(u, v) == d(v, u));
        if (u != v) {
          CHECK(d(u, v) >= 1);
          CHECK(d(u, v) <= n - 1);
          CHECK(closer_count(d, u, v) + closer_count(d, v, u) <= n);
        }
      }
    }
    if (n <= 12) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          for (Vertex w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
    }
    for (const auto& [u, v] : t.edges()) CHECK(d(u, v) == 1);

    const auto ub = ub_oracle(d);
    CHECK(ub <= ub_upper_bound(n));
    CHECK(mostar_index(t) == mostar_index(t, d));
    CHECK(mostar_index(t) <= ub);

    const auto perm = testing::random_permutation(n, rng);
    const auto relabeled = t.relabeled(perm);
    CHECK(ub_oracle(relabeled) == ub);
    CHECK(mostar_index(relabeled) == mostar_index(t));
    CHECK(canonical_certificate(relabeled) == canonical_certificate(t));
  }
}

TEST_CASE("isomorphism certificate separates small trees") {
  CHECK_FALSE(isomorphic(path(4), star(4)));
  CHECK(isomorphic(path(5), LabeledTree(5, {{3, 1}, {1, 4}, {4, 0}, {0, 2}})));
  // same degree sequence, different trees
  const LabeledTree a(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 5}, {5, 6}});
  const LabeledTree b(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {5, 6}});
  CHECK_FALSE(isomorphic(a, b));
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(LabeledTree(0, {}), ValidationError);
  CHECK_THROWS_AS(LabeledTree(3, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(LabeledTree(3, {{0, 1}, {1, 3}}), ValidationError);
  CHECK_THROWS_AS(LabeledTree(3, {{0, 0}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(LabeledTree(3, {{0, 1}, {1, 0}}), ValidationError);
  // cycle on {0,1,2} leaves vertex 3 unreachable
  CHECK_THROWS_AS(LabeledTree(4, {{0, 1}, {1, 2}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(LabeledTree(kMaxOrder + 1, {}), ValidationError);
}

TEST_CASE("tree file format") {
  const auto t = parse_tree("3\n0 1\n1 2\n");
  CHECK(t.order() == 3);
  CHECK(ub_oracle(t) == 2);
  CHECK(mostar_index(t) == 2);

  std::ostringstream os;
  write_tree(os, t);
  CHECK(os.str() == "3\n0 1\n1 2\n");
  CHECK(ub_oracle(parse_tree(os.str())) == 2);

  CHECK(parse_tree("1\n").order() == 1);
  CHECK_THROWS_AS(parse_tree(""), ValidationError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 2\n2 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1\n"), ValidationError);
  CHECK_THROWS_AS(parse_tree("x\n"), ValidationError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 2.5\n"), ValidationError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 7\n"), ValidationError);
  CHECK_THROWS_AS(parse_tree("-2\n"), ValidationError);
}
