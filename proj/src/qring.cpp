#include "gwstack/qring.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace gwstack {

QPoly QPoly::monomial(Rat c, int degree) {
  QPoly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(degree + 1, Rat(0));
  p.coeffs_[degree] = std::move(c);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat QPoly::evaluate(const Rat& q) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    const Rat& c = coeffs_[d];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << c;
    } else {
      if (c != Rat(1)) os << c << "*";
      os << "q";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.trim();
  return out;
}

QRingElem QRingElem::basis(int basis_size, ClassIndex i) {
  QRingElem e = zero(basis_size);
  e.coeffs.at(i) = QPoly(Rat(1));
  return e;
}

bool QRingElem::is_zero() const {
  for (const auto& p : coeffs)
    if (!p.is_zero()) return false;
  return true;
}

QRingElem& QRingElem::operator+=(const QRingElem& o) {
  if (o.size() != size()) throw std::invalid_argument("quantum ring elements differ in basis size");
  for (int i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

std::string QRingElem::str(const TargetData& td) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    const QPoly& p = coeffs[i];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    int terms = 0;
    for (const Rat& c : p.coeffs()) terms += !c.is_zero();
    if (p == QPoly(Rat(1))) {
      os << class_name(td, i);
    } else if (terms == 1) {
      os << p.str() << "*" << class_name(td, i);
    } else {
      os << "(" << p.str() << ")*" << class_name(td, i);
    }
  }
  return first ? "0" : os.str();
}

QReduced qreduce(int b, int k) {
  if (b < 1 || k < 0) throw std::invalid_argument("qreduce requires b >= 1 and k >= 0");
  return {k / (b + 1), k % (b + 1)};
}

namespace {

QRingElem weighted_basis_product(const TargetData& td, int b, ClassIndex i, ClassIndex j) {
  const QReduced r = qreduce(b, i + j);
  QRingElem out = QRingElem::zero(td.basis_size());
  out.coeffs[r.exponent] = QPoly::monomial(pow(Rat(1, b), r.q_power), r.q_power);
  return out;
}

QRingElem scale(const QRingElem& e, const QPoly& p) {
  QRingElem out = e;
  for (auto& c : out.coeffs) c = c * p;
  return out;
}

}  // namespace

QRingElem basis_product_by_contraction(const TargetData& td, ClassIndex i, ClassIndex j) {
  QRingElem out = QRingElem::zero(td.basis_size());
  for (int d = 0; d <= td.max_base_degree(); ++d) {
    const RatVector v = td.contract3(i, j, d);
    for (int r = 0; r < td.basis_size(); ++r)
      if (!v[r].is_zero()) out.coeffs[r] += QPoly::monomial(v[r], d);
  }
  return out;
}

QRingElem qmul(const TargetData& td, const QRingElem& u, const QRingElem& v) {
  const int n = td.basis_size();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("quantum ring element has wrong basis size");
  QRingElem out = QRingElem::zero(n);
  for (int i = 0; i < n; ++i) {
    if (u.coeffs[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (v.coeffs[j].is_zero()) continue;
      const QRingElem prod = td.weight() ? weighted_basis_product(td, *td.weight(), i, j)
                                         : basis_product_by_contraction(td, i, j);
      out += scale(prod, u.coeffs[i] * v.coeffs[j]);
    }
  }
  return out;
}

RatVector SpecializedRing::basis(ClassIndex i) const {
  RatVector e(size());
  e.at(i) = 1;
  return e;
}

RatVector SpecializedRing::multiply(const RatVector& u, const RatVector& v) const {
  const int n = size();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw std::invalid_argument("vector has wrong basis size");
  RatVector out(n);
  for (int i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      const Rat c = u[i] * v[j];
      const RatVector& p = table_[i][j];
      for (int r = 0; r < n; ++r)
        if (!p[r].is_zero()) out[r] += c * p[r];
    }
  }
  return out;
}

SpecializedRing specialize(const TargetData& td, const Rat& lambda) {
  const int n = td.basis_size();
  std::vector<std::vector<RatVector>> table(n, std::vector<RatVector>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QRingElem p = qmul(td, QRingElem::basis(n, i), QRingElem::basis(n, j));
      RatVector row(n);
      for (int r = 0; r < n; ++r) row[r] = p.coeffs[r].evaluate(lambda);
      table[i][j] = std::move(row);
    }
  return SpecializedRing(lambda, std::move(table));
}

bool divisor_generation_check(const TargetData& td, const Rat& lambda) {
  const SpecializedRing ring = specialize(td, lambda);
  EchelonSpan span(ring.size());
  std::deque<RatVector> frontier;
  RatVector one = ring.basis(td.fundamental_index());
  span.insert(one);
  frontier.push_back(std::move(one));
  while (!frontier.empty()) {
    RatVector v = std::move(frontier.front());
    frontier.pop_front();
    for (ClassIndex d : td.divisor_indices()) {
      RatVector w = ring.multiply(v, ring.basis(d));
      if (span.insert(w)) frontier.push_back(std::move(w));
    }
  }
  return span.rank() == static_cast<std::size_t>(ring.size());
}

std::string class_name(const TargetData& td, ClassIndex i) {
  if (td.weight()) return i == 0 ? "1" : "a^" + std::to_string(i);
  if (td.id() == "P2") return i == 0 ? "1" : (i == 1 ? "H" : "H^" + std::to_string(i));
  return "e" + std::to_string(i);
}

}  // namespace gwstack
