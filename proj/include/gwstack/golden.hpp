#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwstack/engine.hpp"
#include "gwstack/rational.hpp"

namespace gwstack {

// One tabulated invariant N_d(k_1, ..., k_{b-1}); k_i multiplies alpha^i.
struct GoldenRow {
  int b = 0;
  int degree = 0;
  std::vector<int> mults;
  Rat value;

  Insertions exponents() const;
  std::string label() const;  // e.g. "N_0(2,2)"
  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

class GoldenParseError : public std::runtime_error {
 public:
  GoldenParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses `b d k_1,...,k_{b-1} p/q` lines; '#' starts a comment. Each row is
// checked against the Degree Axiom and must have more than three insertions.
std::vector<GoldenRow> parse_golden(std::istream& in);

// FNV-1a over the canonical rendering of the rows.
std::uint64_t golden_checksum(const std::vector<GoldenRow>& rows);

inline constexpr std::uint64_t kReferenceChecksum = 0xd98e46a033edfe73ULL;

// The table shipped with the library, checksum-verified on first use.
const std::vector<GoldenRow>& reference_table();

// Rows of the shipped table for 2 <= b <= 6.
std::vector<GoldenRow> reference_rows(int b);

struct RowCheck {
  GoldenRow row;
  Rat computed;
  bool match = false;
  // Recomputed with the alternate donor policy when the row mismatches.
  std::optional<Rat> alternate;
};

struct VerifyReport {
  int b = 0;
  std::vector<RowCheck> rows;
  std::vector<GWRow> extra;         // nonzero invariants absent from the table
  std::vector<GoldenRow> missing;   // table rows the enumeration did not find
  std::size_t matched() const;
  bool support_equal() const { return extra.empty() && missing.empty(); }
  bool passed() const { return matched() == rows.size() && support_equal(); }
};

VerifyReport verify(int b, const std::vector<GoldenRow>& table);
VerifyReport verify(int b);

void write_report(std::ostream& os, const VerifyReport& report);

}  // namespace gwstack
