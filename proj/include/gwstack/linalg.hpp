#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gwstack/rational.hpp"

namespace gwstack {

using RatVector = std::vector<Rat>;

// Dense square-or-rectangular matrix over the rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Incrementally maintained row-echelon basis of a subspace of Q^n.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t ambient_dim) : dim_(ambient_dim) {}

  // Adds v to the span. Returns false when v was already in it.
  bool insert(RatVector v);
  bool contains(RatVector v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

 private:
  RatVector reduce(RatVector v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;      // each row has a leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace gwstack
