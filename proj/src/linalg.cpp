#include "gwstack/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gwstack {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rat scale = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rat f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatVector EchelonSpan::reduce(RatVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool EchelonSpan::contains(RatVector v) const {
  for (const Rat& x : reduce(std::move(v)))
    if (!x.is_zero()) return false;
  return true;
}

bool EchelonSpan::insert(RatVector v) {
  v = reduce(std::move(v));
  std::size_t lead = 0;
  while (lead < dim_ && v[lead].is_zero()) ++lead;
  if (lead == dim_) return false;
  const Rat scale = v[lead];
  for (Rat& x : v) x /= scale;
  // Keep existing rows reduced at the new pivot so reduce() stays single-pass.
  for (auto& row : rows_) {
    const Rat f = row[lead];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

}  // namespace gwstack
