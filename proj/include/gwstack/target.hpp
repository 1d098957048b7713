#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwstack/linalg.hpp"
#include "gwstack/rational.hpp"

namespace gwstack {

// Index of a class in the target's additive basis.
using ClassIndex = int;

// Asserts that the 3-point class <partner, divisor, *> at degree `shift` equals
// coeff * alpha_target and vanishes at every other degree.
struct DivisorFactorization {
  ClassIndex partner = 0;
  ClassIndex divisor = 0;
  int shift = 0;
  Rat coeff;
};

// Raw reconstruction datum handed to TargetData for validation.
struct TargetSpec {
  std::string id;
  std::vector<Rat> orbdeg;
  Rat dim;
  Rat c1_degree;
  ClassIndex fundamental_index = 0;
  std::vector<ClassIndex> divisor_indices;
  std::vector<Rat> divisor_degree;  // parallel to divisor_indices
  RatMatrix pairing;
  // Keys are (i, j, k, d); any ordering of i, j, k is accepted.
  std::map<std::array<int, 4>, Rat> base3;
  // Keys are (i, j, d) with d >= 1.
  std::map<std::array<int, 3>, Rat> base2;
  // Keyed by the factored basis index.
  std::map<ClassIndex, DivisorFactorization> factorizations;
  // Set for P(1,b): enables exponent arithmetic in the quantum product.
  std::optional<int> weight;
};

// Finite, validated reconstruction datum for one target. Immutable.
class TargetData {
 public:
  // Throws std::invalid_argument when any structural invariant fails.
  explicit TargetData(TargetSpec spec);

  const std::string& id() const { return spec_.id; }
  int basis_size() const { return static_cast<int>(spec_.orbdeg.size()); }
  const Rat& orbdeg(ClassIndex i) const { return spec_.orbdeg.at(i); }
  const Rat& dim() const { return spec_.dim; }
  const Rat& c1_degree() const { return spec_.c1_degree; }
  ClassIndex fundamental_index() const { return spec_.fundamental_index; }
  const std::vector<ClassIndex>& divisor_indices() const { return spec_.divisor_indices; }
  bool is_divisor(ClassIndex i) const;
  // Integral of the divisor class over the curve-class generator.
  const Rat& divisor_degree(ClassIndex divisor) const;
  const RatMatrix& pairing() const { return spec_.pairing; }
  const RatMatrix& pairing_inverse() const { return inverse_; }
  const DivisorFactorization* factorization(ClassIndex t) const;
  std::optional<int> weight() const { return spec_.weight; }

  // Largest degree carrying a nonzero base 3-point entry.
  int max_base_degree() const { return max_degree_; }

  // Base-table lookups; zero when absent.
  Rat three_point(ClassIndex i, ClassIndex j, ClassIndex k, int d) const;
  // Throws std::invalid_argument for d < 1.
  Rat two_point(ClassIndex i, ClassIndex j, int d) const;

  // Degree forced by the Degree Axiom for these insertions, if it is a
  // nonnegative integer.
  std::optional<int> forced_degree(std::span<const ClassIndex> insertions) const;

  // Coefficient vector of the 3-point class <i, j, *> at degree d.
  RatVector contract3(ClassIndex i, ClassIndex j, int d) const;

 private:
  void check_index(ClassIndex i) const;
  void validate();

  TargetSpec spec_;
  RatMatrix inverse_;
  int max_degree_ = 0;
  // Orbifold degrees times a common denominator, for integer degree solving.
  std::vector<std::int64_t> scaled_orbdeg_;
  std::int64_t scaled_dim_ = 0;
  std::int64_t scaled_c1_ = 0;
  std::int64_t scale_ = 1;
};

// The exact inverse of the pairing matrix.
const RatMatrix& pairing_inverse(const TargetData& td);

// P(1,b): basis alpha^0..alpha^b, alpha^b the untwisted divisor x.
TargetData build_p1b(int b);

// Projective plane: basis 1, H, H^2.
TargetData build_p2();

}  // namespace gwstack
