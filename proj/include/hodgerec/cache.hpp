#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hodgerec/engine.hpp"

namespace hodgerec {

inline constexpr int kCacheFormatVersion = 1;

// Cache file I/O error; `line` is the 1-based offending line (0 when the
// problem is not tied to a line).
class cache_error : public std::runtime_error {
 public:
  cache_error(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// JSON-lines snapshot of the memo, one record per line, sorted by key.
// Line 1 is the format header {"format":"hodgerec-cache","version":1};
// records look like {"kind":"D","g":4,"index":"4,2,1","num":"27","den":"8"}.
void cache_save(const Engine& engine, std::ostream& out);
void cache_save(const Engine& engine, const std::string& path);

// Merges records into the engine memo. Idempotent; a record whose value
// conflicts with an in-memory one, a malformed line, or a version mismatch
// raises cache_error with the offending line number.
void cache_load(Engine& engine, std::istream& in);
void cache_load(Engine& engine, const std::string& path);

}  // namespace hodgerec
