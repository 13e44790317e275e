#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spellfix/editdist.hpp"

namespace spellfix {

struct LexiconEntry {
  std::u32string word;
  std::uint64_t frequency = 1;
};

struct WordDistance {
  std::u32string word;
  Distance distance = 0;

  bool operator==(const WordDistance&) const = default;
};

// Dictionary of NFC-normalized words with indexes for edit-distance-1,
// adjacent-swap and bounded-distance queries. Immutable once built.
class Lexicon {
 public:
  using WordId = std::uint32_t;

  Lexicon() = default;

  // Normalizes, drops empties and merges duplicates (frequencies summed).
  static Lexicon from_entries(std::vector<LexiconEntry> entries);
  static Lexicon from_words(const std::vector<std::u32string>& words);

  // `word` or `word<TAB>frequency` per line; blank lines and lines starting
  // with '#' are skipped. Throws IoError, Utf8Error (file byte offset) or
  // DataError (line number).
  static Lexicon load(const std::filesystem::path& path);

  // Writes `word<TAB>frequency` lines in code-point order.
  void save(const std::filesystem::path& path) const;

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  // All words in code-point order. A word's position is its WordId.
  const std::vector<std::u32string>& words() const { return words_; }
  const std::u32string& word(WordId id) const { return words_[id]; }
  std::uint64_t frequency(WordId id) const { return frequencies_[id]; }
  std::uint64_t frequency(std::u32string_view word) const;
  std::uint64_t total_frequency() const { return total_frequency_; }

  // Letters appearing in any word, ascending.
  const std::vector<char32_t>& alphabet() const { return alphabet_; }

  bool contains(std::u32string_view word) const;
  // Lookup without normalization; `word` must already be NFC.
  bool contains_nfc(std::u32string_view word) const {
    return ids_.count(std::u32string(word)) != 0;
  }

  // { w in lexicon : levenshtein(w, word) == 1 }, ascending.
  std::vector<std::u32string> candidates_distance1(std::u32string_view word) const;

  // In-lexicon words reachable from `word` by swapping one adjacent pair of
  // unequal letters, ascending.
  std::vector<std::u32string> candidates_adjacent_swap(std::u32string_view word) const;

  // Every word within distance k of `word`, ordered by (distance, word).
  // Scans length buckets with the batched distance kernel.
  std::vector<WordDistance> words_within(std::u32string_view word, Distance k) const;

 private:
  struct LengthBucket {
    std::size_t length = 0;
    std::vector<WordId> ids;       // padded to a multiple of kBlockLanes
    std::vector<char32_t> chars;   // position-major per block of lanes
  };

  void build_indexes();
  void collect_distance1(std::u32string_view key,
                         std::u32string_view query,
                         std::vector<WordId>& out) const;

  std::vector<std::u32string> words_;
  std::vector<std::uint64_t> frequencies_;
  std::uint64_t total_frequency_ = 0;
  std::unordered_map<std::u32string, WordId> ids_;
  std::vector<char32_t> alphabet_;

  // Deletion neighborhood: (hash of word or one-deletion of word, id),
  // sorted by hash. Hash collisions only add candidates that are verified.
  std::vector<std::pair<std::uint64_t, WordId>> deletion_index_;
  std::vector<LengthBucket> buckets_;  // indexed by word length
};

}  // namespace spellfix
