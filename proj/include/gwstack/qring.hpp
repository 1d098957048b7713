#pragma once

#include <string>
#include <vector>

#include "gwstack/linalg.hpp"
#include "gwstack/rational.hpp"
#include "gwstack/target.hpp"

namespace gwstack {

// Polynomial in the formal variable q with rational coefficients; coeffs()[d]
// is the coefficient of q^d. Trailing zeros are trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Rat c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }  // NOLINT(google-explicit-constructor)
  static QPoly monomial(Rat c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int d) const { return d >= 0 && d <= degree() ? coeffs_[d] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat evaluate(const Rat& q) const;
  std::string str() const;

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Element of the small quantum ring: one q-polynomial per basis class.
struct QRingElem {
  std::vector<QPoly> coeffs;

  static QRingElem zero(int basis_size) { return {std::vector<QPoly>(basis_size)}; }
  static QRingElem basis(int basis_size, ClassIndex i);

  int size() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  std::string str(const TargetData& td) const;

  QRingElem& operator+=(const QRingElem& o);
  friend bool operator==(const QRingElem& a, const QRingElem& b) = default;
};

// Exponent reduction in Q[q][a] / (b a^{b+1} - q): a^k = (q/b)^q_power a^exponent.
struct QReduced {
  int q_power = 0;
  int exponent = 0;
  friend bool operator==(const QReduced&, const QReduced&) = default;
};
QReduced qreduce(int b, int k);

// Small quantum product. P(1,b) targets use exponent addition plus qreduce;
// other targets contract base 3-point data with the inverse pairing.
QRingElem qmul(const TargetData& td, const QRingElem& u, const QRingElem& v);

// alpha_i * alpha_j computed by contraction, regardless of target kind.
QRingElem basis_product_by_contraction(const TargetData& td, ClassIndex i, ClassIndex j);

// The quantum ring with q set to a rational value.
class SpecializedRing {
 public:
  SpecializedRing(Rat lambda, std::vector<std::vector<RatVector>> table)
      : lambda_(std::move(lambda)), table_(std::move(table)) {}

  const Rat& lambda() const { return lambda_; }
  int size() const { return static_cast<int>(table_.size()); }
  const RatVector& product(ClassIndex i, ClassIndex j) const { return table_.at(i).at(j); }
  RatVector multiply(const RatVector& u, const RatVector& v) const;
  RatVector basis(ClassIndex i) const;

 private:
  Rat lambda_;
  std::vector<std::vector<RatVector>> table_;
};

SpecializedRing specialize(const TargetData& td, const Rat& lambda);

// True iff the unital subalgebra generated by the divisor classes is the whole
// specialized ring. Computed by saturating the span under divisor products.
bool divisor_generation_check(const TargetData& td, const Rat& lambda);

// Human-readable name of a basis class: "a^k" for P(1,b), "H^k" for P2.
std::string class_name(const TargetData& td, ClassIndex i);

}  // namespace gwstack
