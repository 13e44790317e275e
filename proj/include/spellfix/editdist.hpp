#pragma once

#include <cstddef>
#include <string_view>

namespace spellfix {

// Number of unit-cost insertions, deletions and substitutions.
using Distance = std::size_t;

// Levenshtein distance over unicode scalar sequences.
Distance levenshtein(std::u32string_view a, std::u32string_view b);

// True iff a and b have equal length, differ, and b is a with exactly one
// pair of adjacent letters interchanged.
bool is_adjacent_transposition(std::u32string_view a, std::u32string_view b);

// levenshtein(a, b) <= k, computed in a diagonal band with early exit.
bool within_distance(std::u32string_view a, std::u32string_view b,
                     std::size_t k);

// Position of the single differing letter when a and b have equal length
// and differ in exactly one place; npos otherwise.
std::size_t single_substitution_position(std::u32string_view a,
                                         std::u32string_view b);

}  // namespace spellfix
