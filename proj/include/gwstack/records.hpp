#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gwstack/engine.hpp"
#include "gwstack/rational.hpp"

namespace gwstack {

// One computed invariant of P(1,b) with explicit exponent insertions.
struct GWRecord {
  int b = 0;
  int degree = 0;
  Insertions insertions;
  Rat value;
  friend bool operator==(const GWRecord&, const GWRecord&) = default;
};

// `b d k_1,...,k_n p/q`
std::string render_line(const GWRecord& r);
// {"b":3,"d":0,"insertions":[1,1,2,2],"value":"-1/9"}
std::string render_json(const GWRecord& r);

// Strict inverse of render_line: the value must be in lowest terms, indices
// in [0, b], at least two insertions, sorted or not. The degree is not
// checked here.
std::optional<GWRecord> parse_line(std::string_view line);

class CacheError : public std::runtime_error {
 public:
  CacheError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  // 0 for I/O failures.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// On-disk memo of P(1,b) invariants, possibly for several b.
class CacheStore {
 public:
  // Throws CacheError on I/O failure or a malformed line, including a degree
  // that disagrees with the Degree Axiom.
  void load(const std::filesystem::path& path);
  // Sorted by b, then point count, then insertions.
  void save(const std::filesystem::path& path) const;

  // Adds the entries of an engine's memo; its target must be P(1,b).
  void absorb(const Engine& engine);
  // Pre-populates the engine memo with every entry for its b. Returns the
  // number of entries seeded.
  std::size_t seed(Engine& engine) const;

  std::size_t size() const { return entries_.size(); }

 private:
  void put(GWRecord record, std::size_t line);
  std::map<std::pair<int, Insertions>, GWRecord> entries_;
};

}  // namespace gwstack
