#include "achgnn/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace achgnn {

std::vector<std::uint32_t> Rng::sample_indices(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  if (k >= n) return idx;
  // Partial Fisher-Yates: the first k slots end up holding the sample.
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + uniform_u32(n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace achgnn
