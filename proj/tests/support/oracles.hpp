#pragma once

// Slow, obvious reference implementations used only by tests.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spellfix/errorgen.hpp"
#include "spellfix/letter_map.hpp"

namespace spellfix::testing {

// Full (n+1) x (m+1) table.
inline std::size_t dp_levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

inline bool oracle_swap(const std::u32string& a, const std::u32string& b) {
  if (a.size() != b.size() || a == b) return false;
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  return diff.size() == 2 && diff[1] == diff[0] + 1 && a[diff[0]] == b[diff[1]] &&
         a[diff[1]] == b[diff[0]];
}

using LetterPairs = std::set<std::pair<char32_t, char32_t>>;

inline LetterPairs pairs_of(const LetterMap& map) {
  LetterPairs out;
  for (const auto& [k, vs] : map.table()) {
    for (char32_t v : vs) {
      out.insert({k, v});
      out.insert({v, k});
    }
  }
  return out;
}

// Same length, one differing position, and that letter pair related.
inline bool oracle_one_letter(const std::u32string& a, const std::u32string& b,
                              const LetterPairs& rel) {
  if (a.size() != b.size()) return false;
  std::size_t n = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      ++n;
      at = i;
    }
  }
  return n == 1 && rel.count({a[at], b[at]}) != 0;
}

inline std::set<std::u32string> brute_distance1(const std::vector<std::u32string>& words,
                                               const std::u32string& q) {
  std::set<std::u32string> out;
  for (const auto& w : words) {
    if (dp_levenshtein(w, q) == 1) out.insert(w);
  }
  return out;
}

inline std::set<std::u32string> brute_swaps(const std::vector<std::u32string>& words,
                                           const std::u32string& q) {
  std::set<std::u32string> out;
  for (const auto& w : words) {
    if (oracle_swap(q, w)) out.insert(w);
  }
  return out;
}

// Every ordered pair tested against the three predicates; values ordered
// by (distance, word).
inline std::map<std::u32string, std::vector<std::u32string>> brute_confusion(
    const std::vector<std::u32string>& words, const LetterPairs& adj, const LetterPairs& hom) {
  std::map<std::u32string, std::vector<std::u32string>> out;
  for (const auto& a : words) {
    auto& vals = out[a];
    for (const auto& b : words) {
      if (a == b) continue;
      if (oracle_swap(a, b) || oracle_one_letter(a, b, adj) || oracle_one_letter(a, b, hom)) {
        vals.push_back(b);
      }
    }
    std::sort(vals.begin(), vals.end(), [&](const auto& x, const auto& y) {
      const auto dx = dp_levenshtein(a, x);
      const auto dy = dp_levenshtein(a, y);
      return dx != dy ? dx < dy : x < y;
    });
  }
  return out;
}

// Every string one related-letter substitution away from w.
inline std::set<std::u32string> oracle_one_letter_variants(const std::u32string& w,
                                                           const LetterPairs& rel) {
  std::set<std::u32string> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [a, b] : rel) {
      if (a != w[i]) continue;
      std::u32string v = w;
      v[i] = b;
      out.insert(v);
    }
  }
  return out;
}

inline std::set<std::u32string> oracle_swap_variants(const std::u32string& w) {
  std::set<std::u32string> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    std::u32string v = w;
    std::swap(v[i], v[i + 1]);
    if (v != w) out.insert(v);
  }
  return out;
}

// Cells that have at least one (token, variant) for the sentence.
inline std::set<ErrorClass> oracle_feasible(const std::vector<std::u32string>& tokens,
                                            const std::set<std::u32string>& lexicon,
                                            const LetterPairs& adj, const LetterPairs& hom) {
  std::set<ErrorClass> out;
  auto add = [&](const std::set<std::u32string>& vs, ErrorType t) {
    for (const auto& v : vs) {
      out.insert({lexicon.count(v) ? Category::real : Category::nonreal, t});
    }
  };
  for (const auto& w : tokens) {
    add(oracle_one_letter_variants(w, adj), ErrorType::keyboard);
    add(oracle_swap_variants(w), ErrorType::substitution);
    add(oracle_one_letter_variants(w, hom), ErrorType::homophone);
  }
  return out;
}

// Probability of each outcome class for one sentence under the branch
// policy, given which cells are feasible.
inline std::map<ErrorClass, double> oracle_class_probabilities(
    const std::set<ErrorClass>& feasible, const CorruptionConfig& c) {
  const ErrorClass none{Category::none, ErrorType::none};
  const ErrorClass rk{Category::real, ErrorType::keyboard};
  const ErrorClass rs{Category::real, ErrorType::substitution};
  const ErrorClass rh{Category::real, ErrorType::homophone};
  const ErrorClass nk{Category::nonreal, ErrorType::keyboard};
  const ErrorClass ns{Category::nonreal, ErrorType::substitution};
  const ErrorClass nh{Category::nonreal, ErrorType::homophone};
  const std::vector<ErrorClass> order{rk, rs, nk, ns, nh, rh};
  std::map<ErrorClass, double> p;
  for (const auto& cls : all_error_classes()) p[cls] = 0.0;
  auto land = [&](const ErrorClass& want, double mass) {
    if (feasible.count(want)) {
      p[want] += mass;
      return;
    }
    for (const auto& cls : order) {
      if (feasible.count(cls)) {
        p[cls] += mass;
        return;
      }
    }
    p[none] += mass;
  };
  p[none] += c.p_unchanged;
  double rest = 1.0 - c.p_unchanged;
  if (feasible.count(rh)) {
    p[rh] += rest * c.p_homophone_real;
    rest *= 1.0 - c.p_homophone_real;
  }
  land(rk, rest * c.p_real_branch * c.real_split[0]);
  land(rs, rest * c.p_real_branch * c.real_split[1]);
  land(nk, rest * (1 - c.p_real_branch) * c.nonreal_split[0]);
  land(ns, rest * (1 - c.p_real_branch) * c.nonreal_split[1]);
  land(nh, rest * (1 - c.p_real_branch) * c.nonreal_split[2]);
  return p;
}

}  // namespace spellfix::testing
