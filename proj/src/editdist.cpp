#include "spellfix/editdist.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace spellfix {

Distance levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  std::vector<Distance> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    Distance diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const Distance up = row[j];
      const Distance cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

bool is_adjacent_transposition(std::u32string_view a, std::u32string_view b) {
  if (a.size() != b.size() || a.size() < 2) return false;
  std::size_t first = 0;
  while (first < a.size() && a[first] == b[first]) ++first;
  if (first + 1 >= a.size()) return false;  // equal, or only the last differs
  if (a[first] != b[first + 1] || a[first + 1] != b[first]) return false;
  return a.substr(first + 2) == b.substr(first + 2);
}

bool within_distance(std::u32string_view a, std::u32string_view b,
                     std::size_t k) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n - m > k) return false;
  if (m == 0) return n <= k;

  // Cells outside |i - j| <= k can never be <= k; treat them as k + 1.
  const Distance cap = k + 1;
  std::vector<Distance> prev(m + 1, cap), cur(m + 1, cap);
  for (std::size_t j = 0; j <= std::min(m, k); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > k ? i - k : 1;
    const std::size_t hi = std::min(m, i + k);
    std::fill(cur.begin(), cur.end(), cap);
    cur[0] = i <= k ? i : cap;
    Distance row_min = cur[0];
    for (std::size_t j = lo; j <= hi; ++j) {
      const Distance cost = a[i - 1] == b[j - 1] ? 0 : 1;
      const Distance v =
          std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      cur[j] = std::min(v, cap);
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > k) return false;
    std::swap(prev, cur);
  }
  return prev[m] <= k;
}

std::size_t single_substitution_position(std::u32string_view a,
                                         std::u32string_view b) {
  if (a.size() != b.size()) return std::u32string_view::npos;
  std::size_t pos = std::u32string_view::npos;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (pos != std::u32string_view::npos) return std::u32string_view::npos;
      pos = i;
    }
  }
  return pos;
}

}  // namespace spellfix
