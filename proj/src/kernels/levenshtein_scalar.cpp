#include <algorithm>
#include <vector>

#include "spellfix/kernels/levenshtein_block.hpp"

namespace spellfix::kernels {

void block_distances_scalar(std::u32string_view query, const char32_t* chars,
                            std::size_t length, std::uint32_t bound,
                            std::uint32_t* out) {
  const std::uint32_t cap = bound + 1;
  std::vector<std::uint32_t> prev(length + 1), cur(length + 1);
  for (std::size_t lane = 0; lane < kBlockLanes; ++lane) {
    for (std::size_t j = 0; j <= length; ++j) {
      prev[j] = static_cast<std::uint32_t>(j);
    }
    bool exceeded = false;
    for (std::size_t i = 1; i <= query.size(); ++i) {
      cur[0] = static_cast<std::uint32_t>(i);
      std::uint32_t row_min = cur[0];
      for (std::size_t j = 1; j <= length; ++j) {
        const std::uint32_t cost =
            chars[(j - 1) * kBlockLanes + lane] == query[i - 1] ? 0 : 1;
        cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
        row_min = std::min(row_min, cur[j]);
      }
      std::swap(prev, cur);
      if (row_min > bound) {
        exceeded = true;
        break;
      }
    }
    out[lane] = exceeded ? cap : std::min(prev[length], cap);
  }
}

}  // namespace spellfix::kernels
