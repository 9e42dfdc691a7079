#include <catch_amalgamated.hpp>

#include <algorithm>

#include "tkh/tableaux.hpp"

using namespace tkh;

namespace {

// Oracle: count linear extensions of the box poset by recursion on removable corners.
long count_syt(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
    if (!corner) continue;
    auto next = parts;
    --next[i];
    total += count_syt(next);
  }
  return total;
}

}  // namespace

TEST_CASE("partitions of small n") {
  CHECK(partitions_of(0).size() == 1);
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  std::vector<std::vector<int>> got;
  for (const auto& p : p3) got.push_back(p.parts);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {3}});
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("conjugation is an involution") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("box statistics") {
  Partition p({3, 1});
  auto stats = box_stats(p);
  REQUIRE(stats.size() == 4);
  for (const auto& b : stats) {
    CHECK(b.arm == p[b.row] - b.col - 1);
    CHECK(b.leg == p.conjugate()[b.col] - b.row - 1);
    CHECK(b.coarm == b.col);
    CHECK(b.coleg == b.row);
  }
}

TEST_CASE("SYT counts agree with the corner-removal oracle") {
  CHECK(syt_of(Partition({1, 1, 1, 1})).size() == 1);
  CHECK(syt_of(Partition({2, 1})).size() == 2);
  CHECK(syt_of(Partition({2, 2})).size() == 2);
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(static_cast<long>(syt_of(p).size()) == count_syt(p.parts));
      CHECK(hook_count(p) == count_syt(p.parts));
    }
}

TEST_CASE("tableaux increase along rows and columns") {
  for (const auto& t : syt_of(Partition({3, 2, 1}))) {
    auto rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c + 1 < rows[r].size()) CHECK(rows[r][c] < rows[r][c + 1]);
        if (r + 1 < rows.size() && c < rows[r + 1].size()) CHECK(rows[r][c] < rows[r + 1][c]);
      }
  }
}

TEST_CASE("box weights") {
  const std::vector<std::string> v{"Q", "T"};
  auto row = syt_of(Partition({3}));
  REQUIRE(row.size() == 1);
  CHECK(box_weight(row[0], 1, v, 0, 1) == Poly::constant(v, 1));
  CHECK(box_weight(row[0], 3, v, 0, 1) == Poly::monomial(v, {2, 0}));
  auto col = syt_of(Partition({1, 1, 1}));
  CHECK(box_weight(col[0], 3, v, 0, 1) == Poly::monomial(v, {0, -2}));
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2,1").parts == std::vector<int>{2, 1});
  CHECK(parse_partition("1,2").parts == std::vector<int>{2, 1});
  CHECK_THROWS(parse_partition("2,x"));
}
