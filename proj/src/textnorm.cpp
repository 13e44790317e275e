#include "spellfix/textnorm.hpp"

#include <algorithm>

#include "spellfix/lexicon.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

std::u32string Sentence::text() const {
  std::u32string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(U' ');
    out += tokens[i];
  }
  return out;
}

std::u32string normalize_zwnj(std::u32string_view text, ZwnjMode mode) {
  if (mode == ZwnjMode::preserve) return nfc(text);
  std::u32string stripped;
  stripped.reserve(text.size());
  std::copy_if(text.begin(), text.end(), std::back_inserter(stripped),
               [](char32_t c) { return c != kZwnj; });
  return nfc(stripped);
}

bool is_removed_char(char32_t c) {
  return is_numeric(c) || is_punct_or_symbol(c) || is_latin_letter(c);
}

Sentence tokenize(std::u32string_view line) {
  Sentence out;
  out.raw = std::u32string(line);
  const std::u32string text = nfc(line);
  std::u32string current;
  auto flush = [&] {
    if (!current.empty()) {
      out.tokens.push_back(std::move(current));
      current.clear();
    }
  };
  for (char32_t c : text) {
    if (is_whitespace(c) || is_removed_char(c)) {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return out;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::oov: return "oov";
    case RejectReason::too_short: return "too_short";
    case RejectReason::too_long: return "too_long";
  }
  return "unknown";
}

PruneResult prune_line(std::u32string_view line, const Lexicon& lexicon) {
  PruneResult result;
  Sentence sentence = tokenize(line);
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!lexicon.contains(sentence.tokens[i])) {
      result.reason = RejectReason::oov;
      result.oov_index = i;
      return result;
    }
  }
  if (sentence.tokens.size() < kMinSentenceTokens) {
    result.reason = RejectReason::too_short;
  } else if (sentence.tokens.size() > kMaxSentenceTokens) {
    result.reason = RejectReason::too_long;
  } else {
    result.sentence = std::move(sentence);
  }
  return result;
}

}  // namespace spellfix
