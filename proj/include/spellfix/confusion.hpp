#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spellfix/letter_map.hpp"
#include "spellfix/lexicon.hpp"

namespace spellfix {

// For each dictionary word, the other dictionary words one adjacent swap,
// one keyboard-neighbor substitution or one homophone substitution away.
// Sets are ordered by (levenshtein to the key, code points).
class ConfusionIndex {
 public:
  static constexpr std::uint32_t kBinaryVersion = 1;
  static constexpr char kBinaryMagic[8] = {'S', 'P', 'F', 'X', 'C', 'O', 'N', 'F'};

  ConfusionIndex() = default;

  static ConfusionIndex build(const Lexicon& lexicon, const KeyboardAdjacency& adj,
                              const HomophoneMap& hmap, std::size_t jobs = 1);

  // Empty when `word` is not a key.
  const std::vector<std::u32string>& confusion_set(std::u32string_view word) const;

  std::size_t size() const { return keys_.size(); }
  const std::vector<std::u32string>& keys() const { return keys_; }
  const std::vector<std::u32string>& values(std::size_t i) const { return values_[i]; }

  // `word<TAB>c1,c2,...` per key, keys in code-point order.
  void save_tsv(const std::filesystem::path& path) const;
  // Magic, format version, then length-prefixed UTF-8 strings.
  void save_binary(const std::filesystem::path& path) const;

  static ConfusionIndex load_tsv(const std::filesystem::path& path);
  static ConfusionIndex load_binary(const std::filesystem::path& path);
  // Picks the format from the leading magic bytes.
  static ConfusionIndex load(const std::filesystem::path& path);

  bool operator==(const ConfusionIndex& other) const {
    return keys_ == other.keys_ && values_ == other.values_;
  }

 private:
  void add(std::u32string key, std::vector<std::u32string> values);
  void index_keys();

  std::vector<std::u32string> keys_;
  std::vector<std::vector<std::u32string>> values_;
  std::unordered_map<std::u32string, std::size_t> lookup_;
};

// Sorts by (levenshtein to `key`, code points).
void order_by_distance(std::u32string_view key, std::vector<std::u32string>& words);

}  // namespace spellfix
