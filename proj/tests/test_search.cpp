#include <doctest.h>

#include <set>
#include <string>

#include "test_support.hpp"
#include "treeub/search.hpp"

using namespace treeub;

namespace {

std::vector<std::vector<int>> collect(PartitionStream ps) {
  std::vector<std::vector<int>> out;
  for (; !ps.done(); ps.advance()) out.emplace_back(ps.current().begin(), ps.current().end());
  return out;
}

std::vector<StarSignature> sigs(std::initializer_list<std::vector<int>> lists) {
  std::vector<StarSignature> out;
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

}  // namespace

TEST_CASE("partition stream order") {
  using V = std::vector<std::vector<int>>;
  CHECK(collect(PartitionStream(3)) == V{{3}, {2, 1}, {1, 1, 1}});
  CHECK(collect(PartitionStream(4)) == V{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(collect(PartitionStream(5, 2)) == V{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
  CHECK(collect(PartitionStream(0)) == V{{}});
  CHECK(enumerate_signatures(4).size() == 3);
  CHECK(enumerate_signatures(5).size() == 5);
  CHECK_THROWS_AS(enumerate_signatures(1), ValidationError);
}

TEST_CASE("partition stream is complete, unique and reverse-lexicographic") {
  for (int m = 1; m <= 30; ++m) {
    for (int cap : {m, (m + 1) / 2, 3, 1}) {
      CAPTURE(m);
      CAPTURE(cap);
      const auto all = collect(PartitionStream(m, cap));
      CHECK(static_cast<std::int64_t>(all.size()) == testing::partitions_brute(m, cap));
      for (std::size_t i = 0; i < all.size(); ++i) {
        int sum = 0;
        for (std::size_t j = 0; j < all[i].size(); ++j) {
          sum += all[i][j];
          CHECK(all[i][j] <= cap);
          if (j) CHECK(all[i][j] <= all[i][j - 1]);
        }
        CHECK(sum == m);
        if (i) CHECK(all[i] < all[i - 1]);
      }
    }
  }
}

TEST_CASE("partition counts") {
  for (int m = 0; m <= 40; ++m) CHECK(partition_count(m) == testing::partitions_brute(m, m));
  std::int64_t streamed = 0;
  for_each_signature(59, [&](std::span<const int>) { ++streamed; });
  const auto brute = testing::partitions_brute(58, 58);
  CHECK(brute == 715220);
  CHECK(streamed == brute);
  CHECK(partition_count(58) == brute);
}

TEST_CASE("star maximizers at selected orders") {
  CHECK(max_ub_subdivided_stars(5).witnesses == sigs({{2, 1, 1}}));
  CHECK(max_ub_subdivided_stars(10).witnesses == sigs({{3, 3, 2, 1}, {3, 2, 2, 2}, {3, 2, 2, 1, 1}}));
  CHECK(max_ub_subdivided_stars(44).witnesses ==
        sigs({{6, 6, 6, 5, 5, 4, 4, 3, 3, 1}, {6, 6, 5, 5, 5, 4, 4, 3, 3, 2}}));
  const auto r = max_ub_subdivided_stars(12);
  for (const auto& w : r.witnesses) CHECK(ub_closed_form(w).total == r.max_ub);
  CHECK_THROWS_AS(max_ub_subdivided_stars(1), ValidationError);
}

TEST_CASE("star search agrees with a serial brute-force scan") {
  for (int n = 4; n <= 22; ++n) {
    std::int64_t best = -1;
    std::vector<StarSignature> ws;
    for (const auto& s : enumerate_signatures(n)) {
      const auto ub = ub_oracle(build_tree(s));
      if (ub > best) {
        best = ub;
        ws.clear();
      }
      if (ub == best) ws.push_back(s);
    }
    std::sort(ws.begin(), ws.end(), std::greater<>());
    const auto r = max_ub_subdivided_stars(n, {3});
    CHECK(r.max_ub == best);
    CHECK(r.witnesses == ws);
  }
}

TEST_CASE("star search is independent of thread count") {
  for (int n : {20, 33, 41}) {
    const auto a = max_ub_subdivided_stars(n, {1});
    for (unsigned t : {2u, 5u, 16u}) {
      const auto b = max_ub_subdivided_stars(n, {t});
      CHECK(a.max_ub == b.max_ub);
      CHECK(a.witnesses == b.witnesses);
    }
  }
}

TEST_CASE("free tree counts match Otter's formula") {
  CHECK(enumerate_free_trees(4).size() == 2);
  CHECK(testing::free_tree_count(7) == 11);
  for (int n = 1; n <= kFreeTreeCap; ++n) {
    CAPTURE(n);
    std::int64_t count = 0;
    for_each_free_tree(n, [&](const LabeledTree& t) {
      CHECK(t.order() == n);
      ++count;
    });
    CHECK(count == testing::free_tree_count(n));
  }
  CHECK(testing::free_tree_count(15) == 7741);
}

TEST_CASE("free trees are pairwise non-isomorphic") {
  for (int n : {6, 9, 12, 15}) {
    std::set<std::string> certs;
    std::size_t total = 0;
    for_each_free_tree(n, [&](const LabeledTree& t) {
      certs.insert(canonical_certificate(t));
      ++total;
    });
    CHECK(certs.size() == total);
  }
}

TEST_CASE("free tree enumeration cap") {
  CHECK_THROWS_AS(enumerate_free_trees(17), ValidationError);
  CHECK_THROWS_AS(enumerate_free_trees(0), ValidationError);
  CHECK_THROWS_AS(enumerate_free_trees(10, 8), ValidationError);
}

TEST_CASE("all-trees maximizers") {
  const auto r5 = max_ub_all_trees(5);
  REQUIRE(r5.witnesses.size() == 1);
  CHECK(isomorphic(r5.witnesses[0], build_tree(StarSignature({2, 1, 1}))));

  const auto r10 = max_ub_all_trees(10);
  CHECK(r10.witnesses.size() == 3);
  for (const auto& s : sigs({{3, 2, 2, 2}, {3, 3, 2, 1}, {3, 2, 2, 1, 1}})) {
    bool found = false;
    for (const auto& t : r10.witnesses) found = found || isomorphic(t, build_tree(s));
    CHECK(found);
  }

  const auto r15 = max_ub_all_trees(15);
  REQUIRE(r15.witnesses.size() == 1);
  CHECK(isomorphic(r15.witnesses[0], build_tree(StarSignature({4, 3, 3, 2, 2}))));

  CHECK_THROWS_AS(max_ub_all_trees(3), ValidationError);
  CHECK_THROWS_AS(max_ub_all_trees(16), ValidationError);
}

TEST_CASE("dominance of subdivided stars") {
  CHECK(verify_dominance(5));
  const auto r12 = dominance_report(12);
  CHECK(r12.holds);
  CHECK(r12.witness_signatures == sigs({{3, 3, 2, 2, 1}}));
  CHECK(verify_dominance(15));
}
