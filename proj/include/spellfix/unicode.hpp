#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "spellfix/error.hpp"

namespace spellfix {

inline constexpr char32_t kZwnj = U'\u200C';

// Raised by strict UTF-8 decoding; carries the offset of the first bad byte.
class Utf8Error : public DataError {
 public:
  Utf8Error(std::size_t offset, const std::string& what)
      : DataError(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Strict decoder: rejects overlongs, surrogates and truncated sequences.
std::u32string utf8_decode(std::string_view bytes);
std::string utf8_encode(std::u32string_view text);

// Canonical composition (NFC).
std::u32string nfc(std::u32string_view text);

bool is_whitespace(char32_t c);
// Unicode general categories P* and S*.
bool is_punct_or_symbol(char32_t c);
// Unicode general categories N*.
bool is_numeric(char32_t c);
// Basic Latin and Latin-1 Supplement letters.
bool is_latin_letter(char32_t c);

}  // namespace spellfix
