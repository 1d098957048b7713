#include "gwstack/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

namespace gwstack {

int e_cut(int b, int l) { return l > b ? 0 : 1; }

Rat closed_4pt_deg0(int b, const std::array<int, 4>& k) {
  if (b < 2) throw std::invalid_argument("closed_4pt_deg0 requires b >= 2");
  for (int x : k)
    if (x < 1 || x > b - 1) throw std::invalid_argument("closed_4pt_deg0 exponents must lie in [1, b-1]");
  if (std::accumulate(k.begin(), k.end(), 0) != 2 * b)
    throw std::invalid_argument("closed_4pt_deg0 exponents must sum to 2b");
  long sum = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sum += static_cast<long>(b - (k[i] + k[j])) * e_cut(b, k[i] + k[j]);
  return Rat(sum - b, 2L * b * b);
}

Rat closed_4pt_deg1(int b, const std::array<int, 4>& k) {
  if (b < 1) throw std::invalid_argument("closed_4pt_deg1 requires b >= 1");
  for (int x : k)
    if (x < 1 || x > b) throw std::invalid_argument("closed_4pt_deg1 exponents must lie in [1, b]");
  if (std::accumulate(k.begin(), k.end(), 0) != 3 * b + 1)
    throw std::invalid_argument("closed_4pt_deg1 exponents must sum to 3b+1");
  return Rat(1, static_cast<long>(b) * b * b);
}

}  // namespace gwstack
