#include "hodgerec/cache.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

namespace hodgerec {

namespace {

using json = nlohmann::ordered_json;

bool decimal_string(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t j = start; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  return true;
}

}  // namespace

void cache_save(const Engine& engine, std::ostream& out) {
  json header;
  header["format"] = "hodgerec-cache";
  header["version"] = kCacheFormatVersion;
  out << header.dump() << '\n';
  for (const auto& [key, value] : engine.export_memo()) {
    json rec;
    rec["kind"] = std::string(1, kind_char(key.kind));
    rec["g"] = key.g;
    rec["index"] = key.index.text();
    rec["num"] = value.get_num().get_str();
    rec["den"] = value.get_den().get_str();
    out << rec.dump() << '\n';
  }
}

void cache_save(const Engine& engine, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw cache_error("cannot write cache file: " + path, 0);
  cache_save(engine, out);
  out.flush();
  if (!out) throw cache_error("write failed for cache file: " + path, 0);
}

void cache_load(Engine& engine, std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded())
      throw cache_error("cache line " + std::to_string(line_no) +
                            ": not valid JSON",
                        line_no);
    if (!header_seen) {
      if (rec.value("format", "") != "hodgerec-cache" ||
          rec.value("version", -1) != kCacheFormatVersion)
        throw cache_error("cache line 1: unsupported format/version", line_no);
      header_seen = true;
      continue;
    }
    const auto fail = [&](const std::string& what) -> cache_error {
      return cache_error("cache line " + std::to_string(line_no) + ": " + what,
                         line_no);
    };
    if (!rec.contains("kind") || !rec["kind"].is_string() ||
        !rec.contains("g") || !rec["g"].is_number_integer() ||
        !rec.contains("index") || !rec["index"].is_string() ||
        !rec.contains("num") || !rec["num"].is_string() ||
        !rec.contains("den") || !rec["den"].is_string())
      throw fail("missing or mistyped field");
    auto kind = kind_from_text(rec["kind"].get<std::string>());
    if (!kind) throw fail("kind must be \"D\" or \"d\"");
    const int g = rec["g"].get<int>();
    if (g < 0) throw fail("negative genus");
    auto index = MultiIndex::parse(rec["index"].get<std::string>());
    if (!index) throw fail("unparsable index");
    const std::string num = rec["num"].get<std::string>();
    const std::string den = rec["den"].get<std::string>();
    if (!decimal_string(num) || !decimal_string(den) || den[0] == '-')
      throw fail("num must be a decimal string, den a positive decimal string");
    Int den_int(den);
    if (den_int == 0) throw fail("denominator must be positive");
    Rational value = make_rational(Int(num), std::move(den_int));
    try {
      engine.import_value(IntegralKey{*kind, g, *index}, value);
    } catch (const consistency_error& e) {
      throw fail(std::string("conflicting record: ") + e.what());
    }
  }
  if (!header_seen) throw cache_error("cache file has no header line", 0);
}

void cache_load(Engine& engine, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cache_error("cannot read cache file: " + path, 0);
  cache_load(engine, in);
}

}  // namespace hodgerec
