#pragma once

#include <filesystem>
#include <map>
#include <utility>
#include <vector>

namespace spellfix {

// One-to-many letter relation, symmetrized on construction. Used for both
// keyboard adjacency and sound-alike (homophone) letters.
class LetterMap {
 public:
  using Entries = std::vector<std::pair<char32_t, std::vector<char32_t>>>;

  LetterMap() = default;

  // Throws DataError when a letter lists itself.
  static LetterMap from_entries(const Entries& entries);

  // UTF-8 lines `letter<TAB>n1,n2,...`; '#' starts a comment line.
  // Errors carry the path and line number.
  static LetterMap load(const std::filesystem::path& path);

  // Writes the symmetrized relation in the load format.
  void save(const std::filesystem::path& path) const;

  // Neighbors of `letter` in insertion order; empty when not a key.
  const std::vector<char32_t>& neighbors(char32_t letter) const;

  bool related(char32_t a, char32_t b) const;
  bool has_key(char32_t letter) const { return table_.count(letter) != 0; }
  bool empty() const { return table_.empty(); }
  const std::map<char32_t, std::vector<char32_t>>& table() const { return table_; }

 private:
  void add(char32_t from, char32_t to);

  std::map<char32_t, std::vector<char32_t>> table_;
};

using KeyboardAdjacency = LetterMap;
using HomophoneMap = LetterMap;

}  // namespace spellfix
