#pragma once

// Test-only oracles, independent of the reconstruction engine.

#include <vector>

#include <gmpxx.h>

#include "gwstack/rational.hpp"

namespace gwstack::testing {

// Classical count of rational plane curves of degree d through 3d-1 points:
// N_d = sum_{d1+d2=d} N_d1 N_d2 d1^2 d2 (d2 C(3d-4, 3d1-2) - d1 C(3d-4, 3d1-1)).
inline std::vector<Rat> kontsevich_plane_counts(int max_degree) {
  auto binom = [](long n, long k) -> mpz_class {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  };
  std::vector<mpz_class> n(max_degree + 1, 0);
  if (max_degree >= 1) n[1] = 1;
  for (int d = 2; d <= max_degree; ++d) {
    mpz_class sum = 0;
    for (int d1 = 1; d1 < d; ++d1) {
      const int d2 = d - d1;
      sum += n[d1] * n[d2] * d1 * d1 * d2 * (d2 * binom(3 * d - 4, 3 * d1 - 2) - d1 * binom(3 * d - 4, 3 * d1 - 1));
    }
    n[d] = sum;
  }
  std::vector<Rat> out;
  for (const auto& v : n) out.emplace_back(mpq_class(v));
  return out;
}

}  // namespace gwstack::testing
