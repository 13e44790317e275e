#include "spellfix/letter_map.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "spellfix/error.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

namespace {

std::u32string trim(std::u32string s) {
  while (!s.empty() && is_whitespace(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_whitespace(s[i])) ++i;
  return s.substr(i);
}

}  // namespace

void LetterMap::add(char32_t from, char32_t to) {
  auto& list = table_[from];
  if (std::find(list.begin(), list.end(), to) == list.end()) list.push_back(to);
}

LetterMap LetterMap::from_entries(const Entries& entries) {
  LetterMap map;
  for (const auto& [letter, neighbors] : entries) {
    for (char32_t n : neighbors) {
      if (n == letter) {
        throw DataError("letter U+" + std::to_string(static_cast<unsigned>(letter)) +
                        " lists itself");
      }
      map.add(letter, n);
    }
  }
  // Symmetric closure, visiting keys in code-point order.
  const auto forward = map.table_;
  for (const auto& [letter, neighbors] : forward) {
    for (char32_t n : neighbors) map.add(n, letter);
  }
  return map;
}

LetterMap LetterMap::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  Entries entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::u32string text;
    try {
      text = nfc(utf8_decode(line));
    } catch (const Utf8Error& e) {
      throw DataError(where + ": " + e.what());
    }
    const auto tab = text.find(U'\t');
    if (tab == std::u32string::npos) throw DataError(where + ": expected letter<TAB>neighbors");
    const std::u32string key = trim(text.substr(0, tab));
    if (key.size() != 1) throw DataError(where + ": key must be a single letter");

    std::vector<char32_t> neighbors;
    std::u32string rest = text.substr(tab + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(U',', start);
      if (comma == std::u32string::npos) comma = rest.size();
      const std::u32string item = trim(rest.substr(start, comma - start));
      if (!item.empty()) {
        if (item.size() != 1) throw DataError(where + ": neighbor must be a single letter");
        if (item[0] == key[0]) throw DataError(where + ": letter lists itself");
        neighbors.push_back(item[0]);
      }
      start = comma + 1;
    }
    if (neighbors.empty()) throw DataError(where + ": empty neighbor list");
    entries.emplace_back(key[0], std::move(neighbors));
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  return from_entries(entries);
}

void LetterMap::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& [letter, neighbors] : table_) {
    out << utf8_encode(std::u32string(1, letter)) << '\t';
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      if (i) out << ',';
      out << utf8_encode(std::u32string(1, neighbors[i]));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

const std::vector<char32_t>& LetterMap::neighbors(char32_t letter) const {
  static const std::vector<char32_t> kNone;
  auto it = table_.find(letter);
  return it == table_.end() ? kNone : it->second;
}

bool LetterMap::related(char32_t a, char32_t b) const {
  const auto& n = neighbors(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

}  // namespace spellfix
