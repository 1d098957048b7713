#include "gwstack/golden.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gwstack/target.hpp"

namespace gwstack {

namespace detail {
extern const char* const kReferenceData;
}

namespace {

std::optional<std::vector<int>> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    if (item.size() > 6) return std::nullopt;
    out.push_back(std::stoi(item));
  }
  if (out.empty() || s.back() == ',') return std::nullopt;
  return out;
}

std::string canonical_line(const GoldenRow& r) {
  std::ostringstream os;
  os << r.b << ' ' << r.degree << ' ';
  for (std::size_t i = 0; i < r.mults.size(); ++i) os << (i ? "," : "") << r.mults[i];
  os << ' ' << r.value.str();
  return os.str();
}

}  // namespace

Insertions GoldenRow::exponents() const {
  Insertions out;
  for (std::size_t i = 0; i < mults.size(); ++i) out.insert(out.end(), mults[i], static_cast<ClassIndex>(i + 1));
  return out;
}

std::string GoldenRow::label() const {
  std::ostringstream os;
  os << "N_" << degree << "(";
  for (std::size_t i = 0; i < mults.size(); ++i) os << (i ? "," : "") << mults[i];
  os << ")";
  return os.str();
}

std::vector<GoldenRow> parse_golden(std::istream& in) {
  std::vector<GoldenRow> rows;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string b_s, d_s, mult_s, value_s, trailing;
    if (!(ls >> b_s)) continue;
    if (!(ls >> d_s >> mult_s >> value_s) || (ls >> trailing)) throw GoldenParseError(lineno, "expected 4 fields");
    GoldenRow row;
    auto b = parse_int_list(b_s);
    auto d = parse_int_list(d_s);
    auto mults = parse_int_list(mult_s);
    auto value = Rat::parse_canonical(value_s);
    if (!b || b->size() != 1 || !d || d->size() != 1) throw GoldenParseError(lineno, "malformed b or d");
    if (!mults) throw GoldenParseError(lineno, "malformed multiplicity list");
    if (!value) throw GoldenParseError(lineno, "value is not a rational in lowest terms");
    row.b = b->front();
    row.degree = d->front();
    row.mults = std::move(*mults);
    row.value = std::move(*value);
    if (row.b < 2) throw GoldenParseError(lineno, "b must be at least 2");
    if (row.mults.size() != static_cast<std::size_t>(row.b - 1))
      throw GoldenParseError(lineno, "expected b-1 multiplicities");
    const long n = std::accumulate(row.mults.begin(), row.mults.end(), 0L);
    long weighted = 0;
    for (std::size_t i = 0; i < row.mults.size(); ++i) weighted += static_cast<long>(i + 1) * row.mults[i];
    if (n <= 3) throw GoldenParseError(lineno, "rows must have more than three insertions");
    if (weighted != static_cast<long>(row.degree) * (row.b + 1) + static_cast<long>(row.b) * (n - 2))
      throw GoldenParseError(lineno, "row violates the degree axiom");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t golden_checksum(const std::vector<GoldenRow>& rows) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const GoldenRow& r : rows) {
    for (unsigned char c : canonical_line(r) + "\n") {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

const std::vector<GoldenRow>& reference_table() {
  static const std::vector<GoldenRow> table = [] {
    std::istringstream in(detail::kReferenceData);
    auto rows = parse_golden(in);
    if (golden_checksum(rows) != kReferenceChecksum)
      throw std::runtime_error("embedded reference table failed its checksum");
    return rows;
  }();
  return table;
}

std::vector<GoldenRow> reference_rows(int b) {
  if (b < 2 || b > 6) throw std::invalid_argument("tabulated rows exist for 2 <= b <= 6 only");
  std::vector<GoldenRow> out;
  for (const GoldenRow& r : reference_table())
    if (r.b == b) out.push_back(r);
  return out;
}

std::size_t VerifyReport::matched() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowCheck& c) { return c.match; }));
}

VerifyReport verify(int b, const std::vector<GoldenRow>& table) {
  VerifyReport report;
  report.b = b;
  Engine engine(build_p1b(b));
  std::map<Insertions, const GoldenRow*> golden_keys;
  for (const GoldenRow& r : table) {
    if (r.b != b) continue;
    RowCheck check{r, engine.gw_at(r.exponents(), r.degree), false, std::nullopt};
    check.match = check.computed == r.value;
    if (!check.match) {
      Engine alternate(build_p1b(b), DonorPolicy::kSmallest);
      check.alternate = alternate.gw_at(r.exponents(), r.degree);
    }
    golden_keys.emplace(r.exponents(), &r);
    report.rows.push_back(std::move(check));
  }
  std::map<Insertions, bool> found;
  for (GWRow& row : enumerate_nonzero(engine)) {
    auto it = golden_keys.find(row.insertions);
    if (it == golden_keys.end() || it->second->degree != row.degree)
      report.extra.push_back(std::move(row));
    else
      found[row.insertions] = true;
  }
  for (const auto& [key, row] : golden_keys)
    if (!found.count(key)) report.missing.push_back(*row);
  return report;
}

VerifyReport verify(int b) { return verify(b, reference_rows(b)); }

void write_report(std::ostream& os, const VerifyReport& report) {
  os << "P(1," << report.b << ")\n";
  for (const RowCheck& c : report.rows) {
    os << "  " << (c.match ? "ok      " : "MISMATCH") << "  " << c.row.label() << " = " << c.row.value.str();
    if (!c.match) {
      os << "  computed " << c.computed.str();
      if (c.alternate) {
        os << (*c.alternate == c.computed ? "  (engine consistent: candidate erratum)"
                                          : "  (engine disagrees with itself: alternate " + c.alternate->str() + ")");
      }
    }
    os << "\n";
  }
  for (const GWRow& e : report.extra) {
    GoldenRow r{report.b, e.degree, {}, e.value};
    auto m = multiplicities(report.b, e.insertions);
    r.mults.assign(m.begin() + 1, m.end() - 1);
    os << "  EXTRA     " << r.label() << " = " << e.value.str() << " (nonzero, not tabulated)\n";
  }
  for (const GoldenRow& r : report.missing)
    os << "  MISSING   " << r.label() << " = " << r.value.str() << " (tabulated, not enumerated)\n";
  os << "  " << report.matched() << "/" << report.rows.size() << " rows match, enumeration "
     << (report.support_equal() ? "set-equal" : "differs") << "\n";
}

}  // namespace gwstack
