#include "gwstack/target.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gwstack {

namespace {

[[noreturn]] void fail(const std::string& id, const std::string& what) {
  throw std::invalid_argument("target " + id + ": " + what);
}

std::array<int, 4> key3(ClassIndex i, ClassIndex j, ClassIndex k, int d) {
  std::array<int, 3> s{i, j, k};
  std::sort(s.begin(), s.end());
  return {s[0], s[1], s[2], d};
}

std::array<int, 3> key2(ClassIndex i, ClassIndex j, int d) {
  return {std::min(i, j), std::max(i, j), d};
}

std::int64_t scaled(const Rat& r, const mpz_class& lcm) {
  mpq_class v = r.raw() * lcm;
  if (v.get_den() != 1 || !v.get_num().fits_slong_p())
    throw std::invalid_argument("orbifold data out of range");
  return v.get_num().get_si();
}

}  // namespace

TargetData::TargetData(TargetSpec spec) : spec_(std::move(spec)) { validate(); }

void TargetData::check_index(ClassIndex i) const {
  if (i < 0 || i >= basis_size())
    throw std::out_of_range("basis index " + std::to_string(i) + " out of range for " + id());
}

void TargetData::validate() {
  const std::string& id = spec_.id;
  const int n = basis_size();
  if (n < 1) fail(id, "empty basis");
  if (spec_.pairing.rows() != static_cast<std::size_t>(n) || spec_.pairing.cols() != static_cast<std::size_t>(n))
    fail(id, "pairing has wrong shape");
  if (!spec_.pairing.is_symmetric()) fail(id, "pairing is not symmetric");
  auto inv = inverse(spec_.pairing);
  if (!inv) fail(id, "pairing is singular");
  inverse_ = std::move(*inv);

  if (spec_.c1_degree.sign() <= 0) fail(id, "c1 degree must be positive (convergence criterion)");
  if (spec_.fundamental_index < 0 || spec_.fundamental_index >= n) fail(id, "fundamental index out of range");
  if (!spec_.orbdeg[spec_.fundamental_index].is_zero()) fail(id, "fundamental class must have orbifold degree 0");
  if (spec_.divisor_indices.size() != spec_.divisor_degree.size()) fail(id, "divisor data size mismatch");
  for (ClassIndex d : spec_.divisor_indices) {
    if (d < 0 || d >= n) fail(id, "divisor index out of range");
    if (spec_.orbdeg[d] != Rat(2)) fail(id, "divisor class must have orbifold degree 2");
  }

  mpz_class lcm = 1;
  auto fold = [&](const Rat& r) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.raw().get_den_mpz_t()); };
  for (const Rat& r : spec_.orbdeg) fold(r);
  fold(spec_.dim);
  fold(spec_.c1_degree);
  scaled_orbdeg_.clear();
  for (const Rat& r : spec_.orbdeg) scaled_orbdeg_.push_back(scaled(r, lcm));
  scaled_dim_ = scaled(spec_.dim, lcm);
  scaled_c1_ = scaled(spec_.c1_degree, lcm);
  if (!lcm.fits_slong_p()) fail(id, "orbifold data out of range");
  scale_ = lcm.get_si();

  // Drop explicit zeros so lookups and max_degree_ only see support.
  std::map<std::array<int, 4>, Rat> base3;
  for (const auto& [k, v] : spec_.base3) {
    for (int t = 0; t < 3; ++t)
      if (k[t] < 0 || k[t] >= n) fail(id, "base3 index out of range");
    if (k[3] < 0) fail(id, "base3 degree negative");
    if (v.is_zero()) continue;
    const std::array<int, 3> ins{k[0], k[1], k[2]};
    if (forced_degree(ins) != k[3]) fail(id, "base3 entry violates the degree axiom");
    auto key = key3(k[0], k[1], k[2], k[3]);
    if (auto it = base3.find(key); it != base3.end() && it->second != v) fail(id, "base3 entry is not symmetric");
    base3[key] = v;
    max_degree_ = std::max(max_degree_, k[3]);
  }
  spec_.base3 = std::move(base3);

  std::map<std::array<int, 3>, Rat> base2;
  for (const auto& [k, v] : spec_.base2) {
    if (k[0] < 0 || k[0] >= n || k[1] < 0 || k[1] >= n) fail(id, "base2 index out of range");
    if (k[2] < 1) fail(id, "base2 degree must be positive");
    if (v.is_zero()) continue;
    const std::array<int, 2> ins{k[0], k[1]};
    if (forced_degree(ins) != k[2]) fail(id, "base2 entry violates the degree axiom");
    auto key = key2(k[0], k[1], k[2]);
    if (auto it = base2.find(key); it != base2.end() && it->second != v) fail(id, "base2 entry is not symmetric");
    base2[key] = v;
  }
  spec_.base2 = std::move(base2);

  const ClassIndex f = spec_.fundamental_index;
  for (ClassIndex i = 0; i < n; ++i)
    for (ClassIndex j = 0; j < n; ++j) {
      if (three_point(f, i, j, 0) != spec_.pairing(i, j)) fail(id, "<1, a, b>_0 must equal the pairing");
      for (int d = 1; d <= max_degree_; ++d)
        if (!three_point(f, i, j, d).is_zero()) fail(id, "<1, a, b>_d must vanish for d > 0");
    }

  for (std::size_t k = 0; k < spec_.divisor_indices.size(); ++k) {
    const ClassIndex div = spec_.divisor_indices[k];
    for (const auto& [key, v] : spec_.base2) {
      if (three_point(key[0], key[1], div, key[2]) != Rat(key[2]) * spec_.divisor_degree[k] * v)
        fail(id, "base2 entry inconsistent with the divisor axiom");
    }
    for (const auto& [key, v] : spec_.base3) {
      const int d = key[3];
      if (d == 0) continue;
      for (int slot = 0; slot < 3; ++slot) {
        if (key[slot] != div) continue;
        const ClassIndex a = key[(slot + 1) % 3];
        const ClassIndex b = key[(slot + 2) % 3];
        if (v != Rat(d) * spec_.divisor_degree[k] * two_point(a, b, d))
          fail(id, "base3 entry inconsistent with the divisor axiom");
      }
    }
  }

  for (const auto& [t, fac] : spec_.factorizations) {
    if (t < 0 || t >= n) fail(id, "factorization target out of range");
    if (fac.partner < 0 || fac.partner >= n) fail(id, "factorization partner out of range");
    if (!is_divisor(fac.divisor)) fail(id, "factorization divisor is not a divisor class");
    if (fac.shift < 0) fail(id, "factorization shift must be nonnegative");
    if (fac.coeff.is_zero()) fail(id, "factorization coefficient must be nonzero");
    for (int d = 0; d <= std::max(max_degree_, fac.shift); ++d) {
      RatVector got = contract3(fac.partner, fac.divisor, d);
      for (ClassIndex r = 0; r < n; ++r) {
        const Rat want = (d == fac.shift && r == t) ? fac.coeff : Rat(0);
        if (got[r] != want) fail(id, "divisor factorization of class " + std::to_string(t) + " does not hold");
      }
    }
  }
}

bool TargetData::is_divisor(ClassIndex i) const {
  return std::find(spec_.divisor_indices.begin(), spec_.divisor_indices.end(), i) != spec_.divisor_indices.end();
}

const Rat& TargetData::divisor_degree(ClassIndex divisor) const {
  for (std::size_t k = 0; k < spec_.divisor_indices.size(); ++k)
    if (spec_.divisor_indices[k] == divisor) return spec_.divisor_degree[k];
  throw std::invalid_argument("class " + std::to_string(divisor) + " is not a divisor of " + id());
}

const DivisorFactorization* TargetData::factorization(ClassIndex t) const {
  auto it = spec_.factorizations.find(t);
  return it == spec_.factorizations.end() ? nullptr : &it->second;
}

Rat TargetData::three_point(ClassIndex i, ClassIndex j, ClassIndex k, int d) const {
  check_index(i);
  check_index(j);
  check_index(k);
  auto it = spec_.base3.find(key3(i, j, k, d));
  return it == spec_.base3.end() ? Rat(0) : it->second;
}

Rat TargetData::two_point(ClassIndex i, ClassIndex j, int d) const {
  check_index(i);
  check_index(j);
  if (d < 1) throw std::invalid_argument("two-point invariants require degree >= 1");
  auto it = spec_.base2.find(key2(i, j, d));
  return it == spec_.base2.end() ? Rat(0) : it->second;
}

std::optional<int> TargetData::forced_degree(std::span<const ClassIndex> insertions) const {
  const auto n = static_cast<std::int64_t>(insertions.size());
  std::int64_t total = 0;
  for (ClassIndex i : insertions) {
    check_index(i);
    total += scaled_orbdeg_[i];
  }
  // sum orbdeg = 2 d c1 + 2 dim + 2 (n - 3), everything scaled by scale_
  const std::int64_t rest = total - 2 * scaled_dim_ - 2 * (n - 3) * scale_;
  const std::int64_t step = 2 * scaled_c1_;
  if (rest < 0 || rest % step != 0) return std::nullopt;
  return static_cast<int>(rest / step);
}

RatVector TargetData::contract3(ClassIndex i, ClassIndex j, int d) const {
  const int n = basis_size();
  RatVector out(n);
  for (ClassIndex k = 0; k < n; ++k) {
    const Rat c = three_point(i, j, k, d);
    if (c.is_zero()) continue;
    for (ClassIndex l = 0; l < n; ++l)
      if (!inverse_(k, l).is_zero()) out[l] += c * inverse_(k, l);
  }
  return out;
}

const RatMatrix& pairing_inverse(const TargetData& td) { return td.pairing_inverse(); }

TargetData build_p1b(int b) {
  if (b < 1) throw std::invalid_argument("P(1,b) requires b >= 1");
  TargetSpec s;
  s.id = "P(1," + std::to_string(b) + ")";
  s.weight = b;
  for (int k = 0; k <= b; ++k) s.orbdeg.emplace_back(2 * k, b);
  s.dim = 1;
  s.c1_degree = Rat(b + 1, b);
  s.fundamental_index = 0;
  s.divisor_indices = {b};
  s.divisor_degree = {Rat(1, b)};
  s.pairing = RatMatrix(b + 1, b + 1);
  for (int i = 0; i <= b; ++i) s.pairing(i, b - i) = Rat(1, b);
  const Rat inv_b(1, b);
  const Rat inv_b2(1, static_cast<long>(b) * b);
  for (int i = 0; i <= b; ++i)
    for (int j = i; j <= b; ++j)
      for (int k = j; k <= b; ++k) {
        if (i + j + k == b) s.base3[{i, j, k, 0}] = inv_b;
        if (i + j + k == 2 * b + 1) s.base3[{i, j, k, 1}] = inv_b2;
      }
  for (int i = 1; i <= b; ++i) {
    const int j = b + 1 - i;
    if (i <= j) s.base2[{i, j, 1}] = inv_b;
  }
  for (int t = 1; t <= b - 1; ++t) s.factorizations[t] = {t + 1, b, 1, inv_b};
  return TargetData(std::move(s));
}

TargetData build_p2() {
  TargetSpec s;
  s.id = "P2";
  s.orbdeg = {0, 2, 4};
  s.dim = 2;
  s.c1_degree = 3;
  s.fundamental_index = 0;
  s.divisor_indices = {1};
  s.divisor_degree = {1};
  s.pairing = RatMatrix(3, 3);
  for (int i = 0; i <= 2; ++i) s.pairing(i, 2 - i) = 1;
  s.base3[{0, 0, 2, 0}] = 1;
  s.base3[{0, 1, 1, 0}] = 1;
  s.base3[{1, 2, 2, 1}] = 1;
  s.base2[{2, 2, 1}] = 1;
  s.factorizations[2] = {1, 1, 0, 1};
  return TargetData(std::move(s));
}

}  // namespace gwstack
