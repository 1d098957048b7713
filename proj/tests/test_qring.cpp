#include <doctest.h>

#include "gwstack/qring.hpp"

using namespace gwstack;

namespace {

QRingElem e(const TargetData& td, ClassIndex i) { return QRingElem::basis(td.basis_size(), i); }

QRingElem mono(const TargetData& td, Rat c, int qdeg, ClassIndex i) {
  QRingElem out = QRingElem::zero(td.basis_size());
  out.coeffs[i] = QPoly::monomial(std::move(c), qdeg);
  return out;
}

}  // namespace

TEST_CASE("qreduce") {
  CHECK(qreduce(2, 4) == QReduced{1, 1});
  CHECK(qreduce(5, 3) == QReduced{0, 3});
  CHECK(qreduce(3, 8) == QReduced{2, 0});
  CHECK_THROWS(qreduce(0, 1));
}

TEST_CASE("qmul examples") {
  const TargetData p12 = build_p1b(2);
  CHECK(qmul(p12, e(p12, 1), e(p12, 1)) == e(p12, 2));
  CHECK(qmul(p12, e(p12, 2), e(p12, 2)) == mono(p12, Rat(1, 2), 1, 1));

  const TargetData p2 = build_p2();
  CHECK(qmul(p2, e(p2, 2), e(p2, 2)) == mono(p2, Rat(1), 1, 1));
  CHECK(qmul(p2, e(p2, 1), e(p2, 2)) == mono(p2, Rat(1), 1, 0));
  CHECK(qmul(p2, e(p2, 1), e(p2, 1)) == e(p2, 2));

  const TargetData p13 = build_p1b(3);
  CHECK_THROWS_AS(qmul(p2, e(p13, 1), e(p2, 1)), std::invalid_argument);
}

TEST_CASE("exponent arithmetic agrees with base-table contraction") {
  for (int b = 1; b <= 10; ++b) {
    const TargetData td = build_p1b(b);
    for (int i = 0; i <= b; ++i)
      for (int j = 0; j <= b; ++j) {
        CAPTURE(b);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(qmul(td, e(td, i), e(td, j)) == basis_product_by_contraction(td, i, j));
      }
  }
}

TEST_CASE("ring axioms for small b") {
  for (int b = 1; b <= 6; ++b) {
    const TargetData td = build_p1b(b);
    const int n = td.basis_size();
    for (int i = 0; i < n; ++i) {
      CHECK(qmul(td, e(td, 0), e(td, i)) == e(td, i));
      for (int j = 0; j < n; ++j) {
        CHECK(qmul(td, e(td, i), e(td, j)) == qmul(td, e(td, j), e(td, i)));
        for (int k = 0; k < n; ++k)
          CHECK(qmul(td, qmul(td, e(td, i), e(td, j)), e(td, k)) ==
                qmul(td, e(td, i), qmul(td, e(td, j), e(td, k))));
      }
    }
  }
}

TEST_CASE("products respect the orbifold grading") {
  for (int b = 1; b <= 12; ++b) {
    const TargetData td = build_p1b(b);
    for (int i = 0; i <= b; ++i)
      for (int j = 0; j <= b; ++j) {
        const QRingElem p = qmul(td, e(td, i), e(td, j));
        for (int r = 0; r <= b; ++r)
          for (int d = 0; d <= p.coeffs[r].degree(); ++d) {
            if (p.coeffs[r].coeff(d).is_zero()) continue;
            CHECK(Rat(2 * d) * td.c1_degree() + td.orbdeg(r) == td.orbdeg(i) + td.orbdeg(j));
          }
      }
  }
}

TEST_CASE("divisor factorizations hold in the ring") {
  for (int b = 2; b <= 12; ++b) {
    const TargetData td = build_p1b(b);
    for (int t = 1; t <= b - 1; ++t) CHECK(qmul(td, e(td, t + 1), e(td, b)) == mono(td, Rat(1, b), 1, t));
  }
}

TEST_CASE("specialize") {
  const TargetData p12 = build_p1b(2);
  CHECK(specialize(p12, Rat(0)).product(2, 2) == RatVector{0, 0, 0});
  CHECK(specialize(p12, Rat(2)).product(2, 2) == RatVector{0, 1, 0});
  CHECK(specialize(build_p2(), Rat(1)).product(2, 2) == RatVector{0, 1, 0});

  const SpecializedRing ring = specialize(build_p1b(4), Rat(3, 7));
  for (int i = 0; i < ring.size(); ++i) CHECK(ring.product(0, i) == ring.basis(i));
}

TEST_CASE("divisor generation") {
  CHECK(divisor_generation_check(build_p1b(3), Rat(1)));
  CHECK_FALSE(divisor_generation_check(build_p1b(3), Rat(0)));
  CHECK(divisor_generation_check(build_p1b(1), Rat(0)));
  CHECK(divisor_generation_check(build_p2(), Rat(0)));
  CHECK(divisor_generation_check(build_p2(), Rat(5)));
  for (int b = 2; b <= 8; ++b) {
    CHECK(divisor_generation_check(build_p1b(b), Rat(-2, 3)));
    CHECK_FALSE(divisor_generation_check(build_p1b(b), Rat(0)));
  }
}

TEST_CASE("rendering") {
  const TargetData p12 = build_p1b(2);
  CHECK(qmul(p12, e(p12, 2), e(p12, 2)).str(p12) == "1/2*q*a^1");
  CHECK(QPoly(Rat(3)).str() == "3");
  CHECK((QPoly(Rat(1)) + QPoly::monomial(Rat(2), 2)).str() == "1 + 2*q^2");
  CHECK((QPoly(Rat(1)) + QPoly::monomial(Rat(2), 2)).evaluate(Rat(1, 2)) == Rat(3, 2));
}
