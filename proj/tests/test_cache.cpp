#include <doctest.h>

#include <sstream>

#include "hodgerec/cache.hpp"

using namespace hodgerec;

namespace {

MultiIndex idx(std::initializer_list<int> entries) {
  return MultiIndex::canonicalize(RawTuple(entries));
}

std::string dump(const Engine& e) {
  std::ostringstream out;
  cache_save(e, out);
  return out.str();
}

}  // namespace

TEST_CASE("save/load round trip is byte identical") {
  Engine e;
  e.eval(Kind::TwistedD, 4, idx({4, 2, 1}));
  e.eval(Kind::UntwistedD, 3, idx({2, 1}));
  const std::string first = dump(e);

  Engine fresh;
  std::istringstream in(first);
  cache_load(fresh, in);
  CHECK(dump(fresh) == first);

  // reloading into the same engine is an idempotent merge
  std::istringstream again(first);
  CHECK_NOTHROW(cache_load(fresh, again));
  CHECK(dump(fresh) == first);
}

TEST_CASE("loaded records pre-seed evaluation") {
  Engine e;
  std::istringstream in(
      "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
      "{\"kind\":\"D\",\"g\":4,\"index\":\"4,2,1\",\"num\":\"27\",\"den\":\"8\"}\n");
  cache_load(e, in);
  CHECK(e.memo_size() == 1);
  auto before = e.stats();
  CHECK(e.eval(Kind::TwistedD, 4, idx({4, 2, 1})) == Rational(27, 8));
  CHECK(e.stats().hits == before.hits + 1);
  CHECK(e.memo_size() == 1);  // nothing recomputed
}

TEST_CASE("conflicting record is rejected with its line number") {
  Engine e;
  e.eval(Kind::TwistedD, 1, idx({1}));  // 1/4 now known
  std::istringstream in(
      "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"3\"}\n");
  try {
    cache_load(e, in);
    FAIL("expected cache_error");
  } catch (const cache_error& err) {
    CHECK(err.line() == 2);
    CHECK(std::string(err.what()).find("conflict") != std::string::npos);
  }
}

TEST_CASE("version mismatch is rejected") {
  Engine e;
  std::istringstream in("{\"format\":\"hodgerec-cache\",\"version\":7}\n");
  CHECK_THROWS_AS(cache_load(e, in), cache_error);
}

TEST_CASE("malformed lines carry their line number") {
  Engine e;
  std::istringstream in(
      "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"4\"}\n"
      "{\"kind\":\"x\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"4\"}\n");
  try {
    cache_load(e, in);
    FAIL("expected cache_error");
  } catch (const cache_error& err) {
    CHECK(err.line() == 3);
  }
  Engine e2;
  std::istringstream garbage(
      "{\"format\":\"hodgerec-cache\",\"version\":1}\nnot json\n");
  CHECK_THROWS_AS(cache_load(e2, garbage), cache_error);
  Engine e3;
  std::istringstream zero_den(
      "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"0\"}\n");
  CHECK_THROWS_AS(cache_load(e3, zero_den), cache_error);
}

TEST_CASE("empty input is rejected") {
  Engine e;
  std::istringstream in("");
  CHECK_THROWS_AS(cache_load(e, in), cache_error);
}

TEST_CASE("record field validation") {
  const std::string header = "{\"format\":\"hodgerec-cache\",\"version\":1}\n";
  const char* bad_records[] = {
      "{\"kind\":\"D\",\"g\":-1,\"index\":\"1\",\"num\":\"1\",\"den\":\"4\"}",
      "{\"kind\":\"D\",\"g\":1.5,\"index\":\"1\",\"num\":\"1\",\"den\":\"4\"}",
      "{\"kind\":\"D\",\"g\":1,\"index\":\"x\",\"num\":\"1\",\"den\":\"4\"}",
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"\",\"den\":\"4\"}",
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"-4\"}",
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1.5\",\"den\":\"4\"}",
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\"}",
      "[1,2,3]",
  };
  for (const char* record : bad_records) {
    Engine e;
    std::istringstream in(header + record + "\n");
    INFO(record);
    CHECK_THROWS_AS(cache_load(e, in), cache_error);
  }
  // unknown extra fields are tolerated on read
  Engine e;
  std::istringstream in(
      header +
      "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"4\","
      "\"note\":\"extra\"}\n");
  CHECK_NOTHROW(cache_load(e, in));
  CHECK(e.memo_size() == 1);
}

TEST_CASE("records are sorted by key on save") {
  Engine e;
  e.eval(Kind::UntwistedD, 2, idx({1}));
  e.eval(Kind::TwistedD, 3, idx({1}));
  e.eval(Kind::TwistedD, 2, idx({2}));
  const std::string text = dump(e);
  auto d2 = text.find("\"kind\":\"D\",\"g\":2");
  auto d3 = text.find("\"kind\":\"D\",\"g\":3");
  auto u2 = text.find("\"kind\":\"d\",\"g\":2");
  REQUIRE(d2 != std::string::npos);
  REQUIRE(d3 != std::string::npos);
  REQUIRE(u2 != std::string::npos);
  CHECK(d2 < d3);
  CHECK(d3 < u2);
}
