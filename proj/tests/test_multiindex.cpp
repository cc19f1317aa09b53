#include <doctest.h>

#include <algorithm>
#include <random>

#include "hodgerec/multiindex.hpp"

using namespace hodgerec;

TEST_CASE("canonicalize drops zeros and sorts nonincreasing") {
  CHECK(MultiIndex::canonicalize({0, 2, 1}).entries() == std::vector<int>{2, 1});
  CHECK(MultiIndex::canonicalize({}).entries().empty());
  CHECK(MultiIndex::canonicalize({4, 1, 2, 0, 0}).entries() ==
        std::vector<int>{4, 2, 1});
  CHECK(MultiIndex::canonicalize({4, 1, 2, 0, 0}).weight() == 7);
}

TEST_CASE("canonicalize is idempotent and permutation invariant") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> len(0, 6), entry(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    RawTuple raw(static_cast<std::size_t>(len(rng)));
    for (int& e : raw) e = entry(rng);
    MultiIndex canon = MultiIndex::canonicalize(raw);
    CHECK(MultiIndex::canonicalize(canon.entries()) == canon);
    CHECK(canon.weight() == weight_of(canon.entries()));
    RawTuple shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(MultiIndex::canonicalize(shuffled) == canon);
  }
}

TEST_CASE("sub_indices enumerates the componentwise box") {
  CHECK(sub_indices({1}) == std::vector<RawTuple>{{0}, {1}});
  CHECK(sub_indices({}) == std::vector<RawTuple>{{}});
  CHECK(sub_indices({1, 2}) ==
        std::vector<RawTuple>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("sub_indices and decompositions have product cardinality") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 4), entry(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    RawTuple raw(static_cast<std::size_t>(len(rng)));
    std::size_t expected = 1;
    for (int& e : raw) {
      e = entry(rng);
      expected *= static_cast<std::size_t>(e) + 1;
    }
    CHECK(sub_indices(raw).size() == expected);
    auto pairs = decompositions(raw);
    CHECK(pairs.size() == expected);
    for (const auto& [lo, hi] : pairs) {
      REQUIRE(lo.size() == raw.size());
      for (std::size_t j = 0; j < raw.size(); ++j)
        CHECK(lo[j] + hi[j] == raw[j]);
    }
  }
}

TEST_CASE("decomposition examples") {
  CHECK(decompositions({1}).size() == 2);
  CHECK(decompositions({2}).size() == 3);
  CHECK(decompositions({1, 1}).size() == 4);
  auto pairs = decompositions({2});
  CHECK(pairs[0] == std::pair<RawTuple, RawTuple>{{0}, {2}});
  CHECK(pairs[1] == std::pair<RawTuple, RawTuple>{{1}, {1}});
  CHECK(pairs[2] == std::pair<RawTuple, RawTuple>{{2}, {0}});
}

TEST_CASE("append") {
  CHECK(append({1}, 2) == RawTuple{1, 2});
  CHECK(append({}, 0) == RawTuple{0});
  CHECK(append({2, 3}, 1) == RawTuple{2, 3, 1});
}

TEST_CASE("text form and parsing") {
  CHECK(MultiIndex::canonicalize({1, 2, 4}).text() == "4,2,1");
  CHECK(MultiIndex{}.text() == "-");
  CHECK(MultiIndex::parse("4,2,1") == MultiIndex::canonicalize({2, 4, 1}));
  CHECK(MultiIndex::parse("-") == MultiIndex{});
  CHECK(MultiIndex::parse("0,0") == MultiIndex{});
  CHECK_FALSE(MultiIndex::parse("").has_value());
  CHECK_FALSE(MultiIndex::parse("1,,2").has_value());
  CHECK_FALSE(MultiIndex::parse("1, 2").has_value());
  CHECK_FALSE(MultiIndex::parse("a").has_value());
  CHECK_FALSE(MultiIndex::parse("-1").has_value());
  CHECK_FALSE(MultiIndex::parse("1,2,").has_value());
}

TEST_CASE("ordering is by weight then lexicographic") {
  auto lt = [](const char* a, const char* b) {
    return *MultiIndex::parse(a) < *MultiIndex::parse(b);
  };
  CHECK(lt("-", "1"));
  CHECK(lt("2", "1,1,1"));    // weight 2 before weight 3
  CHECK(lt("1,1,1", "2,1"));  // same weight, lexicographic
  CHECK(lt("2,1", "3"));
}

TEST_CASE("canonical index enumeration") {
  auto all = canonical_indices(3, 3);
  REQUIRE(all.size() == 7);
  CHECK(all[0].text() == "-");
  CHECK(all[1].text() == "1");
  CHECK(all[2].text() == "1,1");
  CHECK(all[3].text() == "2");
  CHECK(all[4].text() == "1,1,1");
  CHECK(all[5].text() == "2,1");
  CHECK(all[6].text() == "3");
  CHECK(canonical_indices(3, 2).size() == 6);  // (3) excluded
  CHECK(canonical_indices(0, 0).size() == 1);
}
