// Command-line front end for the genus-zero reconstruction engine.
#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwstack/engine.hpp"
#include "gwstack/golden.hpp"
#include "gwstack/qring.hpp"
#include "gwstack/records.hpp"
#include "gwstack/target.hpp"

namespace {

using namespace gwstack;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kIoError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw UsageError("malformed insertion list: " + text);
    out.push_back(std::stoi(item));
  }
  if (out.empty() || text.back() == ',') throw UsageError("malformed insertion list: " + text);
  return out;
}

std::optional<std::filesystem::path> cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("GWSTACK_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

// Loads the cache (if any) into the engine; returns the store for saving.
CacheStore open_cache(const std::optional<std::filesystem::path>& path, Engine& engine) {
  CacheStore store;
  if (path && std::filesystem::exists(*path)) {
    store.load(*path);
    store.seed(engine);
  }
  return store;
}

void close_cache(const std::optional<std::filesystem::path>& path, CacheStore& store, const Engine& engine) {
  if (!path) return;
  store.absorb(engine);
  store.save(*path);
}

std::string row_label(int b, const GWRow& row, bool full) {
  auto m = multiplicities(b, row.insertions);
  std::ostringstream os;
  os << "N_" << row.degree << "(";
  const std::size_t lo = full ? 0 : 1;
  const std::size_t hi = full ? m.size() : m.size() - 1;
  for (std::size_t i = lo; i < hi; ++i) os << (i > lo ? "," : "") << m[i];
  os << ")";
  return os.str();
}

std::string render_vector(const TargetData& td, const RatVector& v) {
  std::ostringstream os;
  bool first = true;
  for (int r = 0; r < td.basis_size(); ++r) {
    if (v[r].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (v[r] != Rat(1)) os << v[r] << "*";
    os << class_name(td, r);
  }
  return first ? "0" : os.str();
}

struct ComputeArgs {
  int b = 0;
  std::string target = "p1b";
  std::string insertions;
  std::optional<int> degree;
  std::string format = "value";
  std::string cache;
};

int run_compute(const ComputeArgs& a) {
  const std::vector<int> ins = parse_index_list(a.insertions);
  if (ins.size() < 2) throw UsageError("an invariant needs at least two insertions");
  const bool p2 = a.target == "p2";
  if (!p2 && a.b < 1) throw UsageError("--b must be at least 1");
  const TargetData td = p2 ? build_p2() : build_p1b(a.b);
  for (int k : ins)
    if (k >= td.basis_size()) throw UsageError("insertion " + std::to_string(k) + " out of range for " + td.id());
  const auto forced = td.forced_degree(ins);
  const int degree = a.degree.value_or(forced.value_or(0));
  if (ins.size() == 2 && degree == 0) throw UsageError("degree-zero 2-point invariants are degenerate");

  Engine engine(td);
  const auto path = p2 ? std::nullopt : cache_path(a.cache);
  CacheStore store = open_cache(path, engine);
  const Rat value = engine.gw_at(ins, degree);
  close_cache(path, store, engine);

  Insertions sorted(ins.begin(), ins.end());
  std::sort(sorted.begin(), sorted.end());
  if (a.format == "value") {
    std::cout << value << "\n";
  } else if (a.format == "line" && !p2) {
    std::cout << render_line({a.b, degree, sorted, value}) << "\n";
  } else if (a.format == "json") {
    if (p2) {
      nlohmann::ordered_json j;
      j["target"] = td.id();
      j["d"] = degree;
      j["insertions"] = sorted;
      j["value"] = value.str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << render_json({a.b, degree, sorted, value}) << "\n";
    }
  } else {
    throw UsageError("unsupported format for this target: " + a.format);
  }
  return kOk;
}

struct TableArgs {
  int b = 0;
  std::optional<int> max_n;
  std::optional<int> max_d;
  int min_n = 4;
  bool include_divisor = false;
  std::string format = "table";
  std::string cache;
};

int run_table(const TableArgs& a) {
  if (a.b < 1) throw UsageError("--b must be at least 1");
  if (a.min_n < 2) throw UsageError("--min-n must be at least 2");
  if (a.include_divisor && (!a.max_n || !a.max_d))
    throw UsageError("--include-divisor requires --max-n and --max-d");
  Engine engine(build_p1b(a.b));
  const auto path = cache_path(a.cache);
  CacheStore store = open_cache(path, engine);
  EnumerateOptions opts;
  opts.min_n = a.min_n;
  opts.max_n = a.max_n;
  opts.max_d = a.max_d;
  opts.include_special = a.include_divisor;
  const std::vector<GWRow> rows = enumerate_nonzero(engine, opts);
  close_cache(path, store, engine);

  std::ostringstream out;
  if (a.format == "table") {
    std::size_t width = 0;
    for (const GWRow& r : rows) width = std::max(width, row_label(a.b, r, a.include_divisor).size());
    for (const GWRow& r : rows)
      out << std::left << std::setw(static_cast<int>(width)) << row_label(a.b, r, a.include_divisor) << " = "
          << r.value << "\n";
  } else if (a.format == "tsv") {
    for (const GWRow& r : rows) {
      auto m = multiplicities(a.b, r.insertions);
      const std::size_t lo = a.include_divisor ? 0 : 1;
      const std::size_t hi = a.include_divisor ? m.size() : m.size() - 1;
      out << r.degree << '\t';
      for (std::size_t i = lo; i < hi; ++i) out << (i > lo ? "," : "") << m[i];
      out << '\t' << r.value << "\n";
    }
  } else if (a.format == "jsonl") {
    for (const GWRow& r : rows) out << render_json({a.b, r.degree, r.insertions, r.value}) << "\n";
  } else {
    throw UsageError("unknown format: " + a.format);
  }
  std::cout << out.str();
  return kOk;
}

int run_verify(const std::string& which, const std::string& golden_path) {
  std::vector<int> bs;
  if (which == "all") {
    bs = {2, 3, 4, 5, 6};
  } else {
    const auto b = parse_index_list(which);
    if (b.size() != 1 || b[0] < 2 || b[0] > 6) throw UsageError("--b must be in [2, 6] or 'all'");
    bs = b;
  }
  std::vector<GoldenRow> table;
  if (golden_path.empty()) {
    table = reference_table();
  } else {
    std::ifstream in(golden_path);
    if (!in) throw CacheError(0, "cannot open golden file " + golden_path);
    table = parse_golden(in);
  }
  std::size_t matched = 0;
  std::size_t total = 0;
  bool ok = true;
  for (int b : bs) {
    const VerifyReport report = verify(b, table);
    write_report(std::cout, report);
    matched += report.matched();
    total += report.rows.size();
    ok = ok && report.passed();
  }
  std::cout << matched << "/" << total << " rows match\n";
  return ok ? kOk : kMismatch;
}

int run_ring(int b, const std::string& lambda_text, bool check_generation) {
  if (b < 1) throw UsageError("--b must be at least 1");
  const TargetData td = build_p1b(b);
  const int n = td.basis_size();
  if (lambda_text.empty()) {
    if (check_generation) throw UsageError("--check-generation requires --lambda");
    for (int i = 1; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const QRingElem p = qmul(td, QRingElem::basis(n, i), QRingElem::basis(n, j));
        std::cout << class_name(td, i) << " * " << class_name(td, j) << " = " << p.str(td) << "\n";
      }
    return kOk;
  }
  const auto lambda = Rat::parse(lambda_text);
  if (!lambda) throw UsageError("malformed --lambda: " + lambda_text);
  const SpecializedRing ring = specialize(td, *lambda);
  std::cout << "lambda = " << *lambda << "\n";
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j)
      std::cout << class_name(td, i) << " * " << class_name(td, j) << " = " << render_vector(td, ring.product(i, j))
                << "\n";
  if (check_generation)
    std::cout << "generated: " << (divisor_generation_check(td, *lambda) ? "true" : "false") << "\n";
  return kOk;
}

int run_cache_fill(int b, const std::string& path) {
  if (b < 1) throw UsageError("--b must be at least 1");
  Engine engine(build_p1b(b));
  CacheStore store = open_cache(path, engine);
  const auto rows = enumerate_nonzero(engine);
  close_cache(path, store, engine);
  std::cout << "cached " << engine.memo().size() << " invariants of P(1," << b << ") (" << rows.size()
            << " nonzero with n > 3)\n";
  return kOk;
}

int run_cache_check(const std::string& path) {
  CacheStore store;
  store.load(path);
  std::cout << store.size() << " entries\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-zero Gromov-Witten invariants of P(1,b) by WDVV reconstruction"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute one invariant");
  c->add_option("--b", compute.b, "Weight b of P(1,b)");
  c->add_option("--target", compute.target, "Target: p1b (default) or p2")->check(CLI::IsMember({"p1b", "p2"}));
  c->add_option("--insertions", compute.insertions, "Comma-separated basis exponents")->required();
  c->add_option("--degree", compute.degree, "Curve degree (default: forced by the degree axiom)");
  c->add_option("--format", compute.format, "value, line or json")->check(CLI::IsMember({"value", "line", "json"}));
  c->add_option("--cache", compute.cache, "Memo cache file (default: $GWSTACK_CACHE)");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Tabulate all nonzero invariants");
  t->add_option("--b", table.b, "Weight b of P(1,b)")->required();
  t->add_option("--max-n", table.max_n, "Largest number of insertions");
  t->add_option("--max-d", table.max_d, "Largest curve degree");
  t->add_option("--min-n", table.min_n, "Smallest number of insertions (default 4)");
  t->add_flag("--include-divisor", table.include_divisor, "Allow fundamental and divisor insertions");
  t->add_option("--format", table.format, "table, tsv or jsonl")->check(CLI::IsMember({"table", "tsv", "jsonl"}));
  t->add_option("--cache", table.cache, "Memo cache file (default: $GWSTACK_CACHE)");

  std::string verify_b;
  std::string golden_path;
  auto* v = app.add_subcommand("verify", "Check the engine against the tabulated invariants");
  v->add_option("--b", verify_b, "b in [2, 6] or 'all'")->required();
  v->add_option("--golden", golden_path, "Alternative golden data file");

  int ring_b = 0;
  std::string lambda;
  bool check_generation = false;
  auto* r = app.add_subcommand("ring", "Print the (specialized) small quantum product");
  r->add_option("--b", ring_b, "Weight b of P(1,b)")->required();
  r->add_option("--lambda", lambda, "Rational value substituted for q");
  r->add_flag("--check-generation", check_generation, "Test whether divisor classes generate the ring");

  int fill_b = 0;
  std::string fill_path;
  std::string check_path;
  auto* cache = app.add_subcommand("cache", "Manage memo cache files");
  cache->require_subcommand(1);
  auto* fill = cache->add_subcommand("fill", "Compute the table for b and save the memo");
  fill->add_option("--b", fill_b, "Weight b of P(1,b)")->required();
  fill->add_option("--path", fill_path, "Cache file")->required();
  auto* check = cache->add_subcommand("check", "Validate a cache file");
  check->add_option("--path", check_path, "Cache file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*t) return run_table(table);
    if (*v) return run_verify(verify_b, golden_path);
    if (*r) return run_ring(ring_b, lambda, check_generation);
    if (*fill) return run_cache_fill(fill_b, fill_path);
    if (*check) return run_cache_check(check_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const GoldenParseError& e) {
    std::cerr << "error: golden file " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
