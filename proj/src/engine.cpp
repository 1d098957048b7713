#include "gwstack/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwstack {

namespace {

Insertions with(const Insertions& base, ClassIndex extra) {
  Insertions out;
  out.reserve(base.size() + 1);
  auto pos = std::upper_bound(base.begin(), base.end(), extra);
  out.insert(out.end(), base.begin(), pos);
  out.push_back(extra);
  out.insert(out.end(), pos, base.end());
  return out;
}

Insertions without_at(const Insertions& base, std::size_t pos) {
  Insertions out = base;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

Rat binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(mpq_class(r));
}

// RAII marker for an invariant currently being reduced.
class ActiveScope {
 public:
  ActiveScope(std::vector<Insertions>& stack, std::set<Insertions>& set, const Insertions& key)
      : stack_(stack), set_(set), key_(key) {
    if (!set_.insert(key_).second) throw std::logic_error("reconstruction recursion revisited an open invariant");
    stack_.push_back(key_);
  }
  ~ActiveScope() {
    stack_.pop_back();
    set_.erase(key_);
  }
  ActiveScope(const ActiveScope&) = delete;
  ActiveScope& operator=(const ActiveScope&) = delete;

 private:
  std::vector<Insertions>& stack_;
  std::set<Insertions>& set_;
  const Insertions& key_;
};

}  // namespace

InsertionKey InsertionKey::make(const TargetData& td, Insertions insertions, int degree) {
  if (insertions.size() < 2) throw std::invalid_argument("an invariant needs at least two insertions");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  for (ClassIndex i : insertions)
    if (i < 0 || i >= td.basis_size()) throw std::invalid_argument("insertion index out of range");
  std::sort(insertions.begin(), insertions.end());
  return {td.id(), degree, std::move(insertions)};
}

std::size_t InsertionsHash::operator()(const Insertions& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (ClassIndex i : v) {
    h ^= static_cast<std::size_t>(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ v.size();
}

bool MemoCache::insert(const Insertions& key, const Rat& value) {
  auto [it, inserted] = map_.try_emplace(key, value);
  if (!inserted && it->second != value)
    throw std::logic_error("memo conflict: key re-inserted with a different value");
  return inserted;
}

const Rat* MemoCache::find(const Insertions& key) const {
  auto it = map_.find(key);
  return it == map_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Insertions, Rat>> MemoCache::sorted_entries() const {
  std::vector<std::pair<Insertions, Rat>> out(map_.begin(), map_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

Engine::Engine(TargetData td, DonorPolicy policy) : td_(std::move(td)), policy_(policy) {
  const int n = td_.basis_size();
  inverse_rows_.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!td_.pairing_inverse()(i, j).is_zero()) inverse_rows_[i].emplace_back(j, td_.pairing_inverse()(i, j));
}

Insertions Engine::validated(std::span<const ClassIndex> insertions) const {
  if (insertions.size() < 2) throw std::invalid_argument("an invariant needs at least two insertions");
  Insertions sorted(insertions.begin(), insertions.end());
  for (ClassIndex i : sorted)
    if (i < 0 || i >= td_.basis_size()) throw std::invalid_argument("insertion index out of range");
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Rat Engine::gw(std::span<const ClassIndex> insertions) { return evaluate(validated(insertions)); }

Rat Engine::gw_at(std::span<const ClassIndex> insertions, int degree) {
  Insertions sorted = validated(insertions);
  if (td_.forced_degree(sorted) != degree) {
    if (sorted.size() == 2 && degree == 0) throw std::invalid_argument("degree-zero 2-point invariants are degenerate");
    return Rat(0);
  }
  return evaluate(sorted);
}

Rat Engine::evaluate(const Insertions& sorted) {
  if (observer_ && !active_.empty()) observer_(active_.back(), sorted);
  const auto n = sorted.size();
  const std::optional<int> degree = td_.forced_degree(sorted);
  if (n == 2) {
    if (degree == 0) throw std::invalid_argument("degree-zero 2-point invariants are degenerate");
    return degree ? td_.two_point(sorted[0], sorted[1], *degree) : Rat(0);
  }
  if (!degree) return Rat(0);
  if (n == 3) return td_.three_point(sorted[0], sorted[1], sorted[2], *degree);
  if (const Rat* hit = memo_.find(sorted)) {
    ++stats_.memo_hits;
    return *hit;
  }
  Rat value = reduce(sorted, *degree);
  memo_.insert(sorted, value);
  return value;
}

Rat Engine::reduce(const Insertions& sorted, int degree) {
  if (std::binary_search(sorted.begin(), sorted.end(), td_.fundamental_index())) return Rat(0);
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    if (!td_.is_divisor(sorted[pos])) continue;
    if (degree == 0) return Rat(0);
    const Rat factor = Rat(degree) * td_.divisor_degree(sorted[pos]);
    ActiveScope scope(active_, in_progress_, sorted);
    return factor * evaluate(without_at(sorted, pos));
  }
  ActiveScope scope(active_, in_progress_, sorted);
  return solve_wdvv(sorted, degree);
}

Rat Engine::solve_wdvv(const Insertions& sorted, int degree) {
  ++stats_.wdvv_solves;
  // Pivot: the factorizable class of largest orbifold degree, last on ties.
  std::optional<std::size_t> pivot;
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    if (!td_.factorization(sorted[pos])) continue;
    if (!pivot || td_.orbdeg(sorted[pos]) >= td_.orbdeg(sorted[*pivot])) pivot = pos;
  }
  if (!pivot) throw std::logic_error("no insertion of " + td_.id() + " admits a divisor factorization");
  const DivisorFactorization& fac = *td_.factorization(sorted[*pivot]);

  Insertions rest = without_at(sorted, *pivot);
  std::size_t donor_pos = 0;
  if (policy_ == DonorPolicy::kNextLargest) {
    for (std::size_t pos = 0; pos < rest.size(); ++pos)
      if (td_.orbdeg(rest[pos]) >= td_.orbdeg(rest[donor_pos])) donor_pos = pos;
  } else {
    for (std::size_t pos = 0; pos < rest.size(); ++pos)
      if (td_.orbdeg(rest[pos]) < td_.orbdeg(rest[donor_pos])) donor_pos = pos;
  }
  const ClassIndex donor = rest[donor_pos];
  rest = without_at(rest, donor_pos);
  const ClassIndex first = rest.front();
  const Insertions deltas = without_at(rest, 0);

  const int beta3 = degree + fac.shift;
  const Linear lhs = side_sum(first, donor, fac.partner, fac.divisor, deltas, beta3, &sorted);
  const Linear rhs = side_sum(first, fac.partner, donor, fac.divisor, deltas, beta3, &sorted);
  const Rat coeff = lhs.unknown - rhs.unknown;
  if (coeff.is_zero()) throw std::logic_error("WDVV relation does not determine the invariant");
  return (rhs.known - lhs.known) / coeff;
}

Engine::Linear Engine::side_sum(ClassIndex a, ClassIndex b, ClassIndex c, ClassIndex d, const Insertions& deltas,
                                int beta3, const Insertions* unknown) {
  // Group equal deltas so each sub-multiset A is visited once, weighted by
  // the number of index subsets realizing it.
  std::vector<std::pair<ClassIndex, int>> groups;
  for (ClassIndex x : deltas) {
    if (!groups.empty() && groups.back().first == x)
      ++groups.back().second;
    else
      groups.emplace_back(x, 1);
  }

  Linear acc;
  const int basis = td_.basis_size();
  Insertions left_base{a, b};
  Insertions right_base{c, d};
  std::sort(left_base.begin(), left_base.end());
  std::sort(right_base.begin(), right_base.end());

  auto accumulate = [&](const Insertions& left_fixed, const Insertions& right_fixed, const Rat& weight) {
    for (ClassIndex i = 0; i < basis; ++i) {
      Insertions left = with(left_fixed, i);
      const std::optional<int> dl = td_.forced_degree(left);
      if (!dl || *dl > beta3) continue;
      for (const auto& [j, g] : inverse_rows_[i]) {
        Insertions right = with(right_fixed, j);
        if (td_.forced_degree(right) != beta3 - *dl) continue;
        const bool left_unknown = unknown && left == *unknown;
        const bool right_unknown = unknown && right == *unknown;
        if (left_unknown && right_unknown) throw std::logic_error("WDVV relation is quadratic in the unknown");
        if (left_unknown) {
          const Rat rv = evaluate(right);
          if (!rv.is_zero()) acc.unknown += weight * g * rv;
          continue;
        }
        if (right_unknown) {
          const Rat lv = evaluate(left);
          if (!lv.is_zero()) acc.unknown += weight * g * lv;
          continue;
        }
        // The smaller factor first: a zero there avoids recursing into the
        // larger one.
        const bool left_first = left.size() <= right.size();
        const Rat v1 = evaluate(left_first ? left : right);
        if (v1.is_zero()) continue;
        const Rat v2 = evaluate(left_first ? right : left);
        if (v2.is_zero()) continue;
        acc.known += weight * g * v1 * v2;
      }
    }
  };

  std::vector<int> take(groups.size(), 0);
  auto visit = [&](auto&& self, std::size_t g, Rat weight) -> void {
    if (g == groups.size()) {
      Insertions left = left_base;
      Insertions right = right_base;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        left.insert(left.end(), take[k], groups[k].first);
        right.insert(right.end(), groups[k].second - take[k], groups[k].first);
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      accumulate(left, right, weight);
      return;
    }
    for (int t = 0; t <= groups[g].second; ++t) {
      take[g] = t;
      self(self, g + 1, weight * binomial(groups[g].second, t));
    }
  };
  visit(visit, 0, Rat(1));
  return acc;
}

Rat Engine::wdvv_residual(ClassIndex g1, ClassIndex g2, ClassIndex g3, ClassIndex g4,
                          std::span<const ClassIndex> deltas, int beta3) {
  for (ClassIndex i : {g1, g2, g3, g4})
    if (i < 0 || i >= td_.basis_size()) throw std::invalid_argument("insertion index out of range");
  Insertions sorted(deltas.begin(), deltas.end());
  for (ClassIndex i : sorted)
    if (i < 0 || i >= td_.basis_size()) throw std::invalid_argument("insertion index out of range");
  std::sort(sorted.begin(), sorted.end());
  if (beta3 < 0) return Rat(0);
  const Linear lhs = side_sum(g1, g2, g3, g4, sorted, beta3, nullptr);
  const Linear rhs = side_sum(g1, g3, g2, g4, sorted, beta3, nullptr);
  return lhs.known - rhs.known;
}

std::vector<int> multiplicities(int b, const Insertions& insertions) {
  std::vector<int> m(b + 1, 0);
  for (ClassIndex i : insertions) ++m.at(i);
  return m;
}

namespace {

// Nondecreasing sequences of length n over [lo, hi] with the given sum.
template <class Fn>
void for_each_multiset(int n, int lo, int hi, long sum, Fn&& fn) {
  Insertions cur;
  cur.reserve(n);
  auto rec = [&](auto&& self, int remaining, int min_val, long left) -> void {
    if (remaining == 0) {
      if (left == 0) fn(cur);
      return;
    }
    for (int v = min_val; v <= hi; ++v) {
      if (static_cast<long>(v) * remaining > left) break;
      if (static_cast<long>(hi) * remaining < left) continue;
      cur.push_back(v);
      self(self, remaining - 1, v, left - v);
      cur.pop_back();
    }
  };
  rec(rec, n, lo, sum);
}

}  // namespace

std::vector<GWRow> enumerate_nonzero(Engine& engine, const EnumerateOptions& options) {
  const TargetData& td = engine.target();
  if (!td.weight()) throw std::invalid_argument("enumeration requires a P(1,b) target");
  const int b = *td.weight();
  if (options.min_n < 2) throw std::invalid_argument("min_n must be at least 2");
  if (options.include_special && (!options.max_n || !options.max_d))
    throw std::invalid_argument("enumeration with divisor or fundamental insertions needs max_n and max_d");

  std::vector<GWRow> rows;
  const int lo = options.include_special ? 0 : 1;
  const int hi = options.include_special ? b : b - 1;
  for (int d = 0;; ++d) {
    if (options.max_d && d > *options.max_d) break;
    int max_n = options.max_n.value_or(0);
    if (!options.include_special) {
      const int bound = 2 * b - d * (b + 1);
      if (bound < options.min_n) break;
      max_n = options.max_n ? std::min(*options.max_n, bound) : bound;
    }
    for (int n = options.min_n; n <= max_n; ++n) {
      if (n == 2 && d == 0) continue;
      const long sum = static_cast<long>(d) * (b + 1) + static_cast<long>(b) * (n - 2);
      if (hi < lo) continue;
      for_each_multiset(n, lo, hi, sum, [&](const Insertions& key) {
        Rat v = engine.gw(key);
        if (!v.is_zero()) rows.push_back({d, key, std::move(v)});
      });
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [b](const GWRow& x, const GWRow& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return multiplicities(b, x.insertions) < multiplicities(b, y.insertions);
  });
  return rows;
}

}  // namespace gwstack
