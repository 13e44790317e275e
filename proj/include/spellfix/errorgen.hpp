#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spellfix/letter_map.hpp"
#include "spellfix/lexicon.hpp"
#include "spellfix/rng.hpp"
#include "spellfix/textnorm.hpp"

namespace spellfix {

class ConfusionIndex;

enum class Category { none, real, nonreal };
enum class ErrorType { none, keyboard, substitution, homophone };

std::string_view to_string(Category c);
std::string_view to_string(ErrorType t);
Category parse_category(std::string_view s);   // throws DataError
ErrorType parse_error_type(std::string_view s);  // throws DataError

using ErrorClass = std::pair<Category, ErrorType>;

// The six corrupted cells plus (none, none), in report order.
const std::vector<ErrorClass>& all_error_classes();
std::string class_label(const ErrorClass& cls);

// Variant generators. Results are sorted, unique and never contain `word`.
std::vector<std::u32string> keyboard_variants(std::u32string_view word,
                                              const KeyboardAdjacency& adj);
std::vector<std::u32string> swap_variants(std::u32string_view word);
std::vector<std::u32string> homophone_variants(std::u32string_view word,
                                               const HomophoneMap& hmap);

// real iff the variant is a dictionary word.
Category classify_variant(std::u32string_view variant, const Lexicon& lexicon);

// Which generator relates two words, if any. Checked in the order
// homophone, keyboard, substitution.
ErrorType relation_type(std::u32string_view from, std::u32string_view to,
                        const KeyboardAdjacency& adj, const HomophoneMap& hmap);

struct ErrorRecord {
  std::int64_t sentence_id = 0;
  std::vector<std::u32string> corrupted_tokens;
  std::int64_t error_index = -1;
  std::u32string original_word;
  std::u32string corrupted_word;
  Category category = Category::none;
  ErrorType etype = ErrorType::none;

  bool has_error() const { return category != Category::none; }
  // The sentence before corruption.
  std::vector<std::u32string> original_tokens() const;

  bool operator==(const ErrorRecord&) const = default;
};

struct CorruptionConfig {
  double p_unchanged = 0.5;
  double p_homophone_real = 0.8;
  double p_real_branch = 0.5;
  std::array<double, 2> real_split{0.5, 0.5};                  // keyboard, substitution
  std::array<double, 3> nonreal_split{1.0 / 3, 1.0 / 3, 1.0 / 3};  // + homophone
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;

  // Throws ConfigError.
  void validate() const;
};

struct InjectResult {
  ErrorRecord record;
  // The sentence was drawn for corruption but no branch was feasible.
  bool degraded = false;
};

// Corrupts at most one word of an accepted sentence.
//
// Branch policy: u1 < p_unchanged leaves the sentence alone. Otherwise, if
// some word has a real-word homophone variant, u2 < p_homophone_real applies
// one. Failing that, u3 < p_real_branch picks the real-word branch (keyboard
// or substitution per real_split, variants in the lexicon) and the rest pick
// the non-real branch (keyboard, substitution or homophone per
// nonreal_split, variants outside the lexicon). An infeasible choice falls
// through the remaining cells in the fixed order real/keyboard,
// real/substitution, nonreal/keyboard, nonreal/substitution,
// nonreal/homophone, real/homophone; if nothing is feasible the sentence
// stays unchanged. The target word is uniform over words eligible for the
// final cell, and the variant uniform over that word's variants.
InjectResult inject_error(const Sentence& sentence, std::int64_t sentence_id,
                          const CorruptionConfig& config, const Lexicon& lexicon,
                          const KeyboardAdjacency& adj, const HomophoneMap& hmap,
                          Rng& rng);

struct PruneStats {
  std::size_t lines = 0;
  std::size_t accepted = 0;
  std::size_t oov = 0;
  std::size_t too_short = 0;
  std::size_t too_long = 0;
};

struct PrunedCorpus {
  std::vector<Sentence> sentences;
  PruneStats stats;
};

// Prunes every line of a UTF-8 corpus. Rejections are written to `rejects`
// (if given) as `line_number<TAB>reason<TAB>line`.
PrunedCorpus prune_corpus(const std::filesystem::path& corpus,
                          const Lexicon& lexicon, std::ostream* rejects = nullptr);

struct DatasetStats {
  PruneStats pruning;
  std::map<ErrorClass, std::size_t> cells;  // all seven classes present
  std::size_t records = 0;
  std::size_t degraded = 0;
  std::size_t repetitions = 0;
};

struct Dataset {
  std::vector<ErrorRecord> records;
  DatasetStats stats;
};

// Runs inject_error `repetitions` times over the sentences and appends the
// passes. Record k of pass r gets sentence_id r * n + k and the substream
// (seed, k, r), so output is identical for any `jobs`.
Dataset build_dataset(const std::vector<Sentence>& sentences,
                      const CorruptionConfig& config, const Lexicon& lexicon,
                      const KeyboardAdjacency& adj, const HomophoneMap& hmap,
                      std::size_t jobs = 1);

// Prune then build. Throws DataError when no line survives pruning.
Dataset build_dataset(const std::filesystem::path& corpus,
                      const CorruptionConfig& config, const Lexicon& lexicon,
                      const KeyboardAdjacency& adj, const HomophoneMap& hmap,
                      std::size_t jobs = 1, std::ostream* rejects = nullptr);

std::map<ErrorClass, std::size_t> tally(const std::vector<ErrorRecord>& records);

// `label<TAB>category<TAB>etype<TAB>count` rows.
void write_stats(const std::filesystem::path& path, const DatasetStats& stats);

// Keeps every corrupted record, and unchanged records that contain at
// least one word with a non-empty confusion set.
std::vector<ErrorRecord> eval_retention_filter(std::vector<ErrorRecord> records,
                                               const ConfusionIndex& index);

}  // namespace spellfix
