#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hodgerec/cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hodgerec::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("hodgerec-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

int count_lines_with(const std::string& text, const std::string& needle) {
  int n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("compute prints the value and its normalization") {
  auto r = run({"compute", "--kind", "D", "--g", "4", "--index", "1,2,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("27/8") != std::string::npos);
  CHECK(r.out.find("864") != std::string::npos);

  r = run({"compute", "--kind", "d", "--g", "2", "--index", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("= 1\n") != std::string::npos);
  CHECK(r.out.find("normalized 2^3 * value = 8") != std::string::npos);

  r = run({"compute", "--kind", "D", "--g", "3", "--index", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/2") != std::string::npos);
}

TEST_CASE("compute --json emits one structured record") {
  auto r = run({"compute", "--kind", "D", "--g", "4", "--index", "1,2,4",
                "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["kind"] == "D");
  CHECK(j["g"] == 4);
  CHECK(j["index"] == "4,2,1");
  CHECK(j["value"] == "27/8");
  CHECK(j["num"] == "27");
  CHECK(j["den"] == "8");
  CHECK(j["normalized"] == "864");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"compute", "--kind", "X", "--g", "1", "--index", "1"}).code == 2);
  CHECK(run({"compute", "--kind", "D", "--g", "1", "--index", "1,,2"}).code == 2);
  CHECK(run({"compute", "--kind", "D", "--index", "1"}).code == 2);
  CHECK(run({"compute", "--kind", "D", "--g", "-3", "--index", "1"}).code == 2);
  CHECK(run({"tableau"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"table", "--g", "2", "--format", "tsv"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"compute", "--help"}).code == 0);
}

TEST_CASE("table emits the expected genus-2 rows") {
  auto r = run({"table", "--g", "2", "--weight-max", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(count_lines_with(r.out, "D,2,") == 6);
  CHECK(count_lines_with(r.out, "d,2,") == 6);
  CHECK(r.out.find("kind,g,index,numerator,denominator,normalized_integer") == 0);
  CHECK(r.out.find("D,2,\"2,1\",1,8,2") != std::string::npos);

  // default weight-max is 2g-1 = 3, the same table
  auto dflt = run({"table", "--g", "2", "--format", "csv"});
  CHECK(dflt.out == r.out);

  // byte-determinism
  auto again = run({"table", "--g", "2", "--weight-max", "3", "--format", "csv"});
  CHECK(again.out == r.out);
}

TEST_CASE("table at genus 1 has two rows per kind") {
  auto r = run({"table", "--g", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(count_lines_with(r.out, "D,1,") == 2);
  CHECK(count_lines_with(r.out, "d,1,") == 2);
}

TEST_CASE("table json output parses and matches csv content") {
  auto r = run({"table", "--g", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  json rows = json::parse(r.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 12);
  CHECK(rows[0]["kind"] == "D");
  CHECK(rows[0]["index"] == "-");
  CHECK(rows[0]["num"] == "1");
  CHECK(rows[0]["den"] == "2");
}

TEST_CASE("table respects --out and rejects unwritable paths") {
  TempDir tmp;
  const std::string path = (tmp.path / "table.csv").string();
  auto r = run({"table", "--g", "1", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == run({"table", "--g", "1"}).out);

  auto bad = run({"table", "--g", "1", "--out",
                  (tmp.path / "missing" / "table.csv").string()});
  CHECK(bad.code == 2);
}

TEST_CASE("table --jobs matches single-threaded output") {
  auto serial = run({"table", "--g", "4", "--format", "csv"});
  auto parallel = run({"table", "--g", "4", "--format", "csv", "--jobs", "4"});
  CHECK(serial.code == 0);
  CHECK(parallel.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("verify suites run through the CLI") {
  auto r = run({"verify", "--suite", "golden"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite golden: 84 checks, 0 failures") != std::string::npos);
  CHECK(run({"verify", "--suite", "identity", "--n-max", "12"}).code == 0);
  CHECK(run({"verify", "--suite", "k-independence", "--g-max", "3"}).code == 0);
  CHECK(run({"verify", "--suite", "pde", "--t-order", "8", "--weight-cap", "2"})
            .code == 0);
}

TEST_CASE("conjectures command reports and exits 0 when nothing is violated") {
  auto r = run({"conjectures", "--g-max", "2", "--weight-max", "2"});
  REQUIRE(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["g_max"] == 2);
  CHECK(report["violations"] == 0);
  CHECK(report["findings"].is_array());
  CHECK(!report["findings"].empty());
}

TEST_CASE("table with weight cap 0 has one row per kind") {
  auto r = run({"table", "--g", "2", "--weight-max", "0", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(count_lines_with(r.out, "D,2,\"-\",1,2,1") == 1);
  CHECK(count_lines_with(r.out, "d,2,\"-\",1,2,1") == 1);
  CHECK(count_lines_with(r.out, ",2,") == 2);
}

TEST_CASE("golden export") {
  auto csv = run({"golden"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("kind,g,index,numerator,denominator,source") == 0);
  CHECK(count_lines_with(csv.out, "\"value table") == 84);
  CHECK(csv.out.find("D,4,\"4,2,1\",27,8") != std::string::npos);

  auto js = run({"golden", "--format", "json"});
  REQUIRE(js.code == 0);
  json j = json::parse(js.out);
  CHECK(j["values"].size() == 84);
  CHECK(j["polynomials"].size() == 28);
}

TEST_CASE("conjectures output is byte-deterministic") {
  auto a = run({"conjectures", "--g-max", "2", "--weight-max", "2"});
  auto b = run({"conjectures", "--g-max", "2", "--weight-max", "2"});
  CHECK(a.out == b.out);
}

TEST_CASE("HODGEREC_CACHE provides the default cache path") {
  TempDir tmp;
  const std::string cache = (tmp.path / "env-cache.jsonl").string();
  setenv("HODGEREC_CACHE", cache.c_str(), 1);
  auto r = run({"compute", "--kind", "D", "--g", "2", "--index", "1"});
  unsetenv("HODGEREC_CACHE");
  CHECK(r.code == 0);
  CHECK(fs::exists(cache));
}

TEST_CASE("cache flag persists values across runs") {
  TempDir tmp;
  const std::string cache = (tmp.path / "cache.jsonl").string();
  auto first = run({"--cache", cache, "compute", "--kind", "D", "--g", "4",
                    "--index", "1,2,4"});
  REQUIRE(first.code == 0);
  REQUIRE(fs::exists(cache));
  std::ifstream in(cache);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("hodgerec-cache") != std::string::npos);

  auto second = run({"--cache", cache, "compute", "--kind", "D", "--g", "4",
                     "--index", "1,2,4"});
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
}

TEST_CASE("a poisoned cache value makes verification fail with exit 1") {
  TempDir tmp;
  const std::string cache = (tmp.path / "poison.jsonl").string();
  {
    std::ofstream out(cache);
    out << "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
        << "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"3\"}\n";
  }
  auto r = run({"--cache", cache, "verify", "--suite", "golden"});
  CHECK(r.code == 1);
  CHECK(r.out.find("failures") != std::string::npos);
  // the machine-readable failure list names the offending key
  CHECK(r.out.find("D(g=1; 1)") != std::string::npos);
  CHECK(r.out.find("1/3") != std::string::npos);
}

TEST_CASE("a poisoned cache value makes the conjecture scan exit 1") {
  TempDir tmp;
  const std::string cache = (tmp.path / "poison2.jsonl").string();
  {
    std::ofstream out(cache);
    out << "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
        << "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"2\"}\n";
  }
  auto r = run({"--cache", cache, "conjectures", "--g-max", "1",
                "--weight-max", "0"});
  CHECK(r.code == 1);
  json report = json::parse(r.out.substr(r.out.find('{')));
  CHECK(report["violations"].get<int>() >= 1);
  bool vanishing_violated = false;
  for (const auto& f : report["findings"])
    if (f["conjecture"] == "vanishing-sum" && f["status"] == "violated")
      vanishing_violated = true;
  CHECK(vanishing_violated);
}

TEST_CASE("corrupt cache record fails the run with exit 1") {
  TempDir tmp;
  const std::string cache = (tmp.path / "cache.jsonl").string();
  {
    std::ofstream out(cache);
    out << "{\"format\":\"hodgerec-cache\",\"version\":1}\n"
        << "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"3\"}\n"
        << "{\"kind\":\"D\",\"g\":1,\"index\":\"1\",\"num\":\"1\",\"den\":\"4\"}\n";
  }
  auto r = run({"--cache", cache, "compute", "--kind", "D", "--g", "1",
                "--index", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
}
