#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spellfix {

class Lexicon;

enum class ZwnjMode { preserve, strip };

struct Sentence {
  std::vector<std::u32string> tokens;
  std::u32string raw;

  // Tokens joined by single spaces.
  std::u32string text() const;
};

// NFC-normalizes `text`; in strip mode every U+200C is removed first.
std::u32string normalize_zwnj(std::u32string_view text, ZwnjMode mode);

// Characters removed before tokenization: numerics (N*), punctuation and
// symbols (P*, S*), and Latin letters. Removed characters act as separators.
bool is_removed_char(char32_t c);

// NFC, remove the classes above, split on whitespace runs.
Sentence tokenize(std::u32string_view line);

enum class RejectReason { oov, too_short, too_long };

std::string_view to_string(RejectReason reason);

inline constexpr std::size_t kMinSentenceTokens = 5;
inline constexpr std::size_t kMaxSentenceTokens = 256;

struct PruneResult {
  std::optional<Sentence> sentence;
  std::optional<RejectReason> reason;
  // Index of the first out-of-lexicon token when reason == oov.
  std::size_t oov_index = 0;

  bool accepted() const { return sentence.has_value(); }
};

// Token-count limits are checked after removal. OOV takes precedence over
// length so that a rejection always names the first failing rule in order.
PruneResult prune_line(std::u32string_view line, const Lexicon& lexicon);

}  // namespace spellfix
