#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include "spellfix/records.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix::testing {

std::u32string u(std::string_view utf8) { return utf8_decode(utf8); }
std::string s8(std::u32string_view text) { return utf8_encode(text); }

std::vector<std::u32string> words_of(std::string_view utf8) {
  std::vector<std::u32string> out;
  std::istringstream in{std::string(utf8)};
  std::string w;
  while (in >> w) out.push_back(u(w));
  return out;
}

std::filesystem::path data_dir() { return std::filesystem::path(SPELLFIX_SOURCE_DIR) / "data"; }

const std::vector<char32_t>& persian_letters() {
  static const std::vector<char32_t> letters = [] {
    std::u32string all = u("ضصثقفغعهخحجچشسیبلاتنمکگظطزرذدپو");
    return std::vector<char32_t>(all.begin(), all.end());
  }();
  return letters;
}

KeyboardAdjacency persian_keyboard() { return LetterMap::load(data_dir() / "persian_keyboard.tsv"); }
HomophoneMap persian_homophones() { return LetterMap::load(data_dir() / "persian_homophones.tsv"); }

std::u32string random_word(Rng& rng, const std::vector<char32_t>& alphabet, std::size_t min_len,
                           std::size_t max_len) {
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::u32string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.below(alphabet.size())];
  return w;
}

std::vector<std::u32string> random_words(Rng& rng, std::size_t n,
                                         const std::vector<char32_t>& alphabet,
                                         std::size_t min_len, std::size_t max_len) {
  std::set<std::u32string> seen;
  std::vector<std::u32string> out;
  while (out.size() < n) {
    auto w = random_word(rng, alphabet, min_len, max_len);
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::vector<std::u32string>> chain_sentences(Rng& rng,
                                                         const std::vector<std::u32string>& words,
                                                         std::size_t n, std::size_t min_len,
                                                         std::size_t max_len) {
  // Each word gets a few preferred successors.
  std::vector<std::array<std::size_t, 4>> next(words.size());
  for (auto& row : next) {
    for (auto& x : row) x = rng.below(words.size());
  }
  std::vector<std::vector<std::u32string>> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t len = min_len + rng.below(max_len - min_len + 1);
    std::size_t cur = rng.below(words.size());
    std::vector<std::u32string> sent{words[cur]};
    while (sent.size() < len) {
      cur = rng.bernoulli(0.85) ? next[cur][rng.below(4)] : rng.below(words.size());
      sent.push_back(words[cur]);
    }
    out.push_back(std::move(sent));
  }
  return out;
}

std::vector<Sentence> as_sentences(const std::vector<std::vector<std::u32string>>& lists) {
  std::vector<Sentence> out;
  for (const auto& tokens : lists) {
    Sentence s;
    s.tokens = tokens;
    s.raw = s.text();
    out.push_back(std::move(s));
  }
  return out;
}

World make_world(std::uint64_t seed, std::size_t n_words, std::size_t n_sentences,
                 std::size_t max_tokens, std::size_t n_lm_sentences) {
  Rng rng(seed);
  World w;
  w.words = random_words(rng, n_words, persian_letters(), 2, 4);
  w.lexicon = Lexicon::from_words(w.words);
  w.adj = persian_keyboard();
  w.hmap = persian_homophones();
  w.confusion = ConfusionIndex::build(w.lexicon, w.adj, w.hmap);
  Rng text_rng = Rng::substream(seed, {1});
  auto all = chain_sentences(text_rng, w.words, n_sentences + n_lm_sentences, 5, max_tokens);
  w.lm_sentences.assign(all.begin() + static_cast<std::ptrdiff_t>(n_sentences), all.end());
  all.resize(n_sentences);
  w.sentences = as_sentences(all);
  return w;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  write_text_file(path, text);
}

std::string sentence_line(const std::vector<std::u32string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += s8(tokens[i]);
  }
  return out;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("spellfix_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string file_digest(const std::filesystem::path& path) {
  // FNV-1a is enough to compare two files.
  const std::string text = read_text_file(path);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << h << ":" << text.size();
  return out.str();
}

int closed_local_port() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) return 1;
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  socklen_t len = sizeof addr;
  int port = 1;
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) == 0 &&
      ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) == 0) {
    port = ntohs(addr.sin_port);
  }
  ::close(fd);
  return port;
}

}  // namespace spellfix::testing
