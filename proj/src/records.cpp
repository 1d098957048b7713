#include "gwstack/records.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwstack/target.hpp"

namespace gwstack {

namespace {

std::optional<int> parse_small_int(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::string render_line(const GWRecord& r) {
  std::ostringstream os;
  os << r.b << ' ' << r.degree << ' ';
  for (std::size_t i = 0; i < r.insertions.size(); ++i) os << (i ? "," : "") << r.insertions[i];
  os << ' ' << r.value.str();
  return os.str();
}

std::string render_json(const GWRecord& r) {
  nlohmann::ordered_json j;
  j["b"] = r.b;
  j["d"] = r.degree;
  j["insertions"] = r.insertions;
  j["value"] = r.value.str();
  return j.dump();
}

std::optional<GWRecord> parse_line(std::string_view line) {
  std::istringstream ls{std::string(line)};
  std::string b_s, d_s, ins_s, value_s, trailing;
  if (!(ls >> b_s >> d_s >> ins_s >> value_s) || (ls >> trailing)) return std::nullopt;
  auto b = parse_small_int(b_s);
  auto d = parse_small_int(d_s);
  auto value = Rat::parse_canonical(value_s);
  if (!b || *b < 1 || !d || !value) return std::nullopt;
  GWRecord r{*b, *d, {}, std::move(*value)};
  std::string_view rest = ins_s;
  while (true) {
    const auto comma = rest.find(',');
    auto k = parse_small_int(rest.substr(0, comma));
    if (!k || *k > *b) return std::nullopt;
    r.insertions.push_back(*k);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (r.insertions.size() < 2) return std::nullopt;
  return r;
}

void CacheStore::put(GWRecord record, std::size_t line) {
  std::sort(record.insertions.begin(), record.insertions.end());
  auto key = std::make_pair(record.b, record.insertions);
  auto [it, inserted] = entries_.try_emplace(key, record);
  if (!inserted && it->second != record) throw CacheError(line, "conflicting duplicate entry");
}

void CacheStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError(0, "cannot open cache file " + path.string());
  std::map<int, TargetData> targets;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = raw.substr(0, raw.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto record = parse_line(line);
    if (!record) throw CacheError(lineno, "malformed cache line");
    auto it = targets.find(record->b);
    if (it == targets.end()) it = targets.emplace(record->b, build_p1b(record->b)).first;
    const auto forced = it->second.forced_degree(record->insertions);
    if (forced != record->degree) throw CacheError(lineno, "degree disagrees with the degree axiom");
    if (record->insertions.size() == 2 && record->degree == 0) throw CacheError(lineno, "degenerate invariant");
    put(std::move(*record), lineno);
  }
  if (in.bad()) throw CacheError(0, "error reading " + path.string());
}

void CacheStore::save(const std::filesystem::path& path) const {
  std::vector<const GWRecord*> sorted;
  for (const auto& [key, r] : entries_) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const GWRecord* x, const GWRecord* y) {
    if (x->b != y->b) return x->b < y->b;
    if (x->insertions.size() != y->insertions.size()) return x->insertions.size() < y->insertions.size();
    return x->insertions < y->insertions;
  });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw CacheError(0, "cannot write cache file " + path.string());
  out << "# b d k_1,...,k_n value\n";
  for (const GWRecord* r : sorted) out << render_line(*r) << '\n';
  out.flush();
  if (!out) throw CacheError(0, "error writing " + path.string());
}

void CacheStore::absorb(const Engine& engine) {
  const auto b = engine.target().weight();
  if (!b) throw std::invalid_argument("only P(1,b) memos can be cached");
  for (const auto& [key, value] : engine.memo().sorted_entries()) {
    const auto d = engine.forced_degree(key);
    if (!d) continue;
    put(GWRecord{*b, *d, key, value}, 0);
  }
}

std::size_t CacheStore::seed(Engine& engine) const {
  const auto b = engine.target().weight();
  if (!b) return 0;
  std::size_t count = 0;
  for (const auto& [key, r] : entries_) {
    if (key.first != *b || r.insertions.size() < 4) continue;
    engine.memo().insert(r.insertions, r.value);
    ++count;
  }
  return count;
}

}  // namespace gwstack
