#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spellfix/confusion.hpp"
#include "spellfix/letter_map.hpp"
#include "spellfix/lexicon.hpp"
#include "spellfix/rng.hpp"
#include "spellfix/textnorm.hpp"

namespace spellfix::testing {

std::u32string u(std::string_view utf8);
std::string s8(std::u32string_view text);
std::vector<std::u32string> words_of(std::string_view utf8_space_separated);

std::filesystem::path data_dir();
const std::vector<char32_t>& persian_letters();
KeyboardAdjacency persian_keyboard();
HomophoneMap persian_homophones();

std::u32string random_word(Rng& rng, const std::vector<char32_t>& alphabet, std::size_t min_len,
                           std::size_t max_len);

// Distinct words in generation order.
std::vector<std::u32string> random_words(Rng& rng, std::size_t n,
                                         const std::vector<char32_t>& alphabet,
                                         std::size_t min_len, std::size_t max_len);

// Sentences from a sparse first-order chain over `words`, so that an
// n-gram model has something to learn.
std::vector<std::vector<std::u32string>> chain_sentences(Rng& rng,
                                                         const std::vector<std::u32string>& words,
                                                         std::size_t n, std::size_t min_len,
                                                         std::size_t max_len);

struct World {
  std::vector<std::u32string> words;
  Lexicon lexicon;
  KeyboardAdjacency adj;
  HomophoneMap hmap;
  ConfusionIndex confusion;
  std::vector<Sentence> sentences;  // all in-lexicon, 5..max tokens
  std::vector<std::vector<std::u32string>> lm_sentences;  // held-out chain text
};

// Persian-letter lexicon of short words, the standard layout and
// homophone maps, and chain sentences.
World make_world(std::uint64_t seed, std::size_t n_words, std::size_t n_sentences,
                 std::size_t max_tokens = 12, std::size_t n_lm_sentences = 0);

std::vector<Sentence> as_sentences(const std::vector<std::vector<std::u32string>>& token_lists);

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);
std::string sentence_line(const std::vector<std::u32string>& tokens);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

std::string file_digest(const std::filesystem::path& path);

// A loopback port with nothing listening on it.
int closed_local_port();

}  // namespace spellfix::testing
