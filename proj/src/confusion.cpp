#include "spellfix/confusion.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>

#include "spellfix/editdist.hpp"
#include "spellfix/error.hpp"
#include "spellfix/errorgen.hpp"
#include "spellfix/parallel.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

void order_by_distance(std::u32string_view key, std::vector<std::u32string>& words) {
  std::vector<std::pair<Distance, std::u32string>> keyed;
  keyed.reserve(words.size());
  for (auto& w : words) keyed.emplace_back(levenshtein(key, w), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  words.clear();
  for (auto& [d, w] : keyed) words.push_back(std::move(w));
}

ConfusionIndex ConfusionIndex::build(const Lexicon& lexicon,
                                     const KeyboardAdjacency& adj,
                                     const HomophoneMap& hmap, std::size_t jobs) {
  const auto& words = lexicon.words();
  std::vector<std::vector<std::u32string>> values(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) {
    const std::u32string& w = words[i];
    std::vector<std::u32string> all = swap_variants(w);
    auto kv = keyboard_variants(w, adj);
    auto hv = homophone_variants(w, hmap);
    all.insert(all.end(), std::make_move_iterator(kv.begin()), std::make_move_iterator(kv.end()));
    all.insert(all.end(), std::make_move_iterator(hv.begin()), std::make_move_iterator(hv.end()));
    std::vector<std::u32string> hits;
    for (auto& v : all) {
      if (v != w && lexicon.contains_nfc(v)) hits.push_back(std::move(v));
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    order_by_distance(w, hits);
    values[i] = std::move(hits);
  });

  ConfusionIndex index;
  index.keys_ = words;
  index.values_ = std::move(values);
  index.index_keys();
  return index;
}

const std::vector<std::u32string>& ConfusionIndex::confusion_set(
    std::u32string_view word) const {
  static const std::vector<std::u32string> kEmpty;
  auto it = lookup_.find(std::u32string(word));
  if (it == lookup_.end()) {
    const std::u32string normalized = nfc(word);
    if (normalized == word) return kEmpty;
    it = lookup_.find(normalized);
    if (it == lookup_.end()) return kEmpty;
  }
  return values_[it->second];
}

void ConfusionIndex::add(std::u32string key, std::vector<std::u32string> values) {
  keys_.push_back(std::move(key));
  values_.push_back(std::move(values));
}

void ConfusionIndex::index_keys() {
  lookup_.clear();
  lookup_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (!lookup_.emplace(keys_[i], i).second) {
      throw DataError("duplicate confusion key '" + utf8_encode(keys_[i]) + "'");
    }
  }
}

void ConfusionIndex::save_tsv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    out << utf8_encode(keys_[i]) << '\t';
    for (std::size_t j = 0; j < values_[i].size(); ++j) {
      if (j) out << ',';
      out << utf8_encode(values_[i][j]);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                         static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
  out.write(bytes, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_string(std::ostream& out, const std::u32string& s) {
  const std::string bytes = utf8_encode(s);
  put_u32(out, static_cast<std::uint32_t>(bytes.size()));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

class Reader {
 public:
  Reader(std::string data, std::string path) : data_(std::move(data)), path_(std::move(path)) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(data_[pos_ + i]);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    const std::uint64_t lo = u32();
    return lo | (static_cast<std::uint64_t>(u32()) << 32);
  }
  std::u32string string() {
    const std::uint32_t len = u32();
    need(len);
    const std::size_t at = pos_;
    pos_ += len;
    try {
      return utf8_decode(std::string_view(data_).substr(at, len));
    } catch (const Utf8Error& e) {
      throw DataError(path_ + ": bad string at byte " + std::to_string(at + e.offset()));
    }
  }
  std::string_view bytes(std::size_t n) {
    need(n);
    std::string_view v(data_.data() + pos_, n);
    pos_ += n;
    return v;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw DataError(path_ + ": truncated confusion index");
  }

  std::string data_;
  std::string path_;
  std::size_t pos_ = 0;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

void ConfusionIndex::save_binary(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(kBinaryMagic, sizeof kBinaryMagic);
  put_u32(out, kBinaryVersion);
  put_u64(out, keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    put_string(out, keys_[i]);
    put_u32(out, static_cast<std::uint32_t>(values_[i].size()));
    for (const auto& v : values_[i]) put_string(out, v);
  }
  if (!out) throw IoError("write failed: " + path.string());
}

ConfusionIndex ConfusionIndex::load_binary(const std::filesystem::path& path) {
  Reader in(slurp(path), path.string());
  if (std::memcmp(in.bytes(sizeof kBinaryMagic).data(), kBinaryMagic, sizeof kBinaryMagic) != 0) {
    throw DataError(path.string() + ": not a binary confusion index");
  }
  const std::uint32_t version = in.u32();
  if (version != kBinaryVersion) {
    throw DataError(path.string() + ": unsupported confusion index version " +
                    std::to_string(version));
  }
  ConfusionIndex index;
  const std::uint64_t count = in.u64();
  for (std::uint64_t i = 0; i < count; ++i) {
    std::u32string key = in.string();
    const std::uint32_t n = in.u32();
    std::vector<std::u32string> values;
    values.reserve(n);
    for (std::uint32_t j = 0; j < n; ++j) values.push_back(in.string());
    index.add(std::move(key), std::move(values));
  }
  if (!in.done()) throw DataError(path.string() + ": trailing bytes after confusion index");
  index.index_keys();
  return index;
}

ConfusionIndex ConfusionIndex::load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  ConfusionIndex index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError(where + ": expected word<TAB>list");
    std::u32string key, rest;
    try {
      key = utf8_decode(std::string_view(line).substr(0, tab));
      rest = utf8_decode(std::string_view(line).substr(tab + 1));
    } catch (const Utf8Error& e) {
      throw DataError(where + ": " + e.what());
    }
    if (key.empty()) throw DataError(where + ": empty key");
    std::vector<std::u32string> values;
    std::size_t start = 0;
    while (start < rest.size()) {
      std::size_t comma = rest.find(U',', start);
      if (comma == std::u32string::npos) comma = rest.size();
      if (comma == start) throw DataError(where + ": empty list item");
      values.push_back(rest.substr(start, comma - start));
      start = comma + 1;
    }
    index.add(std::move(key), std::move(values));
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  index.index_keys();
  return index;
}

ConfusionIndex ConfusionIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char head[sizeof kBinaryMagic] = {};
  in.read(head, sizeof head);
  if (in.gcount() == sizeof head && std::memcmp(head, kBinaryMagic, sizeof head) == 0) {
    return load_binary(path);
  }
  return load_tsv(path);
}

}  // namespace spellfix
