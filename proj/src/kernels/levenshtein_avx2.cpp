#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "spellfix/kernels/levenshtein_block.hpp"

namespace spellfix::kernels {

namespace {
struct Column {
  __m256i v;
};
}  // namespace

void block_distances_avx2(std::u32string_view query, const char32_t* chars,
                          std::size_t length, std::uint32_t bound,
                          std::uint32_t* out) {
  static_assert(kBlockLanes == 8, "one __m256i of int32 per block column");
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i cap = _mm256_set1_epi32(static_cast<int>(bound + 1));

  std::vector<Column> prev(length + 1), cur(length + 1);
  for (std::size_t j = 0; j <= length; ++j) {
    prev[j].v = _mm256_set1_epi32(static_cast<int>(j));
  }

  for (std::size_t i = 1; i <= query.size(); ++i) {
    const __m256i q = _mm256_set1_epi32(static_cast<int>(query[i - 1]));
    cur[0].v = _mm256_set1_epi32(static_cast<int>(i));
    __m256i row_min = cur[0].v;
    for (std::size_t j = 1; j <= length; ++j) {
      const __m256i c = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(chars + (j - 1) * kBlockLanes));
      const __m256i cost = _mm256_andnot_si256(_mm256_cmpeq_epi32(c, q), one);
      const __m256i sub = _mm256_add_epi32(prev[j - 1].v, cost);
      const __m256i del = _mm256_add_epi32(prev[j].v, one);
      const __m256i ins = _mm256_add_epi32(cur[j - 1].v, one);
      cur[j].v = _mm256_min_epu32(sub, _mm256_min_epu32(del, ins));
      row_min = _mm256_min_epu32(row_min, cur[j].v);
    }
    std::swap(prev, cur);
    // Row minima never decrease, so once every lane exceeds the bound the
    // final distances do too.
    const __m256i over = _mm256_cmpeq_epi32(_mm256_max_epu32(row_min, cap), row_min);
    if (_mm256_movemask_epi8(over) == -1) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), cap);
      return;
    }
  }
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out),
                      _mm256_min_epu32(prev[length].v, cap));
}

}  // namespace spellfix::kernels
