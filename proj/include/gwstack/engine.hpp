#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gwstack/rational.hpp"
#include "gwstack/target.hpp"

namespace gwstack {

// Sorted multiset of basis indices.
using Insertions = std::vector<ClassIndex>;

// Canonical name of one genus-zero invariant. Permutations of the same
// insertions produce equal keys.
struct InsertionKey {
  std::string target;
  int degree = 0;
  Insertions insertions;

  // Sorts `insertions` and validates the indices against `td`.
  static InsertionKey make(const TargetData& td, Insertions insertions, int degree);

  friend auto operator<=>(const InsertionKey&, const InsertionKey&) = default;
};

struct InsertionsHash {
  std::size_t operator()(const Insertions& v) const noexcept;
};

// Per-target memo of computed invariants. The degree is not stored: it is
// forced by the insertions.
class MemoCache {
 public:
  // Returns true when the key is new. Re-inserting an existing key with a
  // different value throws std::logic_error.
  bool insert(const Insertions& key, const Rat& value);
  const Rat* find(const Insertions& key) const;
  std::size_t size() const { return map_.size(); }
  std::vector<std::pair<Insertions, Rat>> sorted_entries() const;

 private:
  std::unordered_map<Insertions, Rat, InsertionsHash> map_;
};

// How the WDVV step picks the insertion that donates a divisor factor.
enum class DonorPolicy { kNextLargest, kSmallest };

struct EngineStats {
  std::size_t wdvv_solves = 0;
  std::size_t memo_hits = 0;
};

// Reconstructs genus-zero invariants from the target's 3-point data.
//
// Recursion for n insertions at forced degree d:
//   n = 2 -> base 2-point table (d = 0 rejected); n = 3 -> base 3-point table;
//   fundamental class present -> 0; untwisted divisor D present ->
//   d * (D . beta_0) * <rest>; otherwise one WDVV relation with the maximal
//   class t written as <partner, D, *>_shift = c * t is solved for the
//   invariant. Every other term in that relation has fewer insertions or a
//   strictly larger maximal class.
//
// Not thread-safe: one engine per thread.
class Engine {
 public:
  using CallObserver = std::function<void(const Insertions& parent, const Insertions& child)>;

  explicit Engine(TargetData td, DonorPolicy policy = DonorPolicy::kNextLargest);

  const TargetData& target() const { return td_; }
  DonorPolicy policy() const { return policy_; }

  std::optional<int> forced_degree(std::span<const ClassIndex> insertions) const {
    return td_.forced_degree(insertions);
  }

  // Invariant at the forced degree; 0 when no degree is forced. Accepts the
  // insertions in any order. Throws std::invalid_argument for fewer than two
  // insertions or a degree-zero 2-point invariant.
  Rat gw(std::span<const ClassIndex> insertions);
  // gw() when `degree` is the forced degree, else 0.
  Rat gw_at(std::span<const ClassIndex> insertions, int degree);

  // LHS - RHS of the WDVV relation for (g1, g2 | g3, g4) with extra
  // insertions `deltas` and total degree beta3.
  Rat wdvv_residual(ClassIndex g1, ClassIndex g2, ClassIndex g3, ClassIndex g4,
                    std::span<const ClassIndex> deltas, int beta3);

  MemoCache& memo() { return memo_; }
  const MemoCache& memo() const { return memo_; }
  const EngineStats& stats() const { return stats_; }

  // Called for every sub-invariant requested while an invariant is being
  // reduced (divisor removal or WDVV step).
  void set_call_observer(CallObserver observer) { observer_ = std::move(observer); }

 private:
  struct Linear {
    Rat known;
    Rat unknown;
  };

  Rat evaluate(const Insertions& sorted);
  Rat reduce(const Insertions& sorted, int degree);
  Rat solve_wdvv(const Insertions& sorted, int degree);
  Linear side_sum(ClassIndex a, ClassIndex b, ClassIndex c, ClassIndex d, const Insertions& deltas, int beta3,
                  const Insertions* unknown);
  Insertions validated(std::span<const ClassIndex> insertions) const;

  TargetData td_;
  DonorPolicy policy_;
  // Nonzero entries of the inverse pairing, per row.
  std::vector<std::vector<std::pair<ClassIndex, Rat>>> inverse_rows_;
  MemoCache memo_;
  EngineStats stats_;
  CallObserver observer_;
  std::vector<Insertions> active_;
  std::set<Insertions> in_progress_;
};

// Enumeration of nonzero invariants of P(1,b).
struct EnumerateOptions {
  int min_n = 4;
  std::optional<int> max_n;
  std::optional<int> max_d;
  // Allow the fundamental class and the divisor as insertions. Requires
  // max_n and max_d, since divisors give unboundedly many nonzero invariants.
  bool include_special = false;
};

struct GWRow {
  int degree = 0;
  Insertions insertions;
  Rat value;
};

// Multiplicities of alpha^0..alpha^b in a P(1,b) key.
std::vector<int> multiplicities(int b, const Insertions& insertions);

// Every nonzero invariant within bounds, ordered by degree and then by
// multiplicity vector. Without special insertions the Degree Axiom bounds
// n <= 2b - d(b+1), so no caps are needed.
std::vector<GWRow> enumerate_nonzero(Engine& engine, const EnumerateOptions& options = {});

}  // namespace gwstack
