#pragma once

#include <array>

#include "gwstack/rational.hpp"

namespace gwstack {

// 0 if l > b, else 1.
int e_cut(int b, int l);

// Degree-zero 4-point invariant of P(1,b), 1 <= k_i <= b-1, sum 2b:
//   (sum over pairs i<j of (b - k_i - k_j) e(k_i + k_j) - b) / (2 b^2)
Rat closed_4pt_deg0(int b, const std::array<int, 4>& k);

// Degree-one 4-point invariant of P(1,b), 1 <= k_i <= b, sum 3b+1: 1/b^3.
Rat closed_4pt_deg1(int b, const std::array<int, 4>& k);

}  // namespace gwstack
