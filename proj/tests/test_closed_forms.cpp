#include <doctest.h>

#include "gwstack/closed_forms.hpp"
#include "gwstack/engine.hpp"

using namespace gwstack;

TEST_CASE("e_cut") {
  CHECK(e_cut(3, 4) == 0);
  CHECK(e_cut(3, 3) == 1);
  CHECK(e_cut(5, 0) == 1);
}

TEST_CASE("closed_4pt_deg0") {
  CHECK(closed_4pt_deg0(2, {1, 1, 1, 1}) == Rat(-1, 4));
  CHECK(closed_4pt_deg0(3, {1, 1, 2, 2}) == Rat(-1, 9));
  CHECK(closed_4pt_deg0(5, {1, 2, 3, 4}) == Rat(-1, 25));
  CHECK_THROWS_AS(closed_4pt_deg0(3, {1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(closed_4pt_deg0(3, {0, 2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(closed_4pt_deg0(3, {3, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("the pair sum runs over unordered pairs") {
  // Summing over the 12 ordered pairs doubles the sum and gives -1/18 for
  // N_0(2,2) on P(1,3), which the tabulated -1/9 rules out.
  const std::array<int, 4> k{1, 1, 2, 2};
  const int b = 3;
  long ordered = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) ordered += (b - (k[i] + k[j])) * e_cut(b, k[i] + k[j]);
  CHECK(Rat(ordered - b, 2 * b * b) == Rat(-1, 18));
  CHECK(closed_4pt_deg0(b, k) == Rat(-1, 9));
}

TEST_CASE("closed_4pt_deg1") {
  CHECK(closed_4pt_deg1(5, {4, 4, 4, 4}) == Rat(1, 125));
  CHECK(closed_4pt_deg1(6, {4, 5, 5, 5}) == Rat(1, 216));
  CHECK(closed_4pt_deg1(2, {1, 2, 2, 2}) == Rat(1, 8));
  CHECK_THROWS_AS(closed_4pt_deg1(5, {4, 4, 4, 3}), std::invalid_argument);
}

TEST_CASE("engine agrees with the closed forms for small b") {
  for (int b = 2; b <= 6; ++b) {
    Engine engine(build_p1b(b));
    for (int k1 = 1; k1 <= b; ++k1)
      for (int k2 = 1; k2 <= b; ++k2)
        for (int k3 = 1; k3 <= b; ++k3) {
          const int k4d0 = 2 * b - k1 - k2 - k3;
          if (k1 < b && k2 < b && k3 < b && k4d0 >= 1 && k4d0 <= b - 1)
            CHECK(engine.gw(Insertions{k1, k2, k3, k4d0}) == closed_4pt_deg0(b, {k1, k2, k3, k4d0}));
          const int k4d1 = 3 * b + 1 - k1 - k2 - k3;
          if (k4d1 >= 1 && k4d1 <= b)
            CHECK(engine.gw(Insertions{k1, k2, k3, k4d1}) == closed_4pt_deg1(b, {k1, k2, k3, k4d1}));
        }
  }
}
