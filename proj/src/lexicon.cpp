#include "spellfix/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>

#include "spellfix/kernels/levenshtein_block.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

namespace {

constexpr Lexicon::WordId kPadId = 0xFFFFFFFFu;

std::uint64_t hash_key(std::u32string_view key) {
  return std::hash<std::u32string_view>{}(key);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return buf.str();
}

}  // namespace

Lexicon Lexicon::from_entries(std::vector<LexiconEntry> entries) {
  std::unordered_map<std::u32string, std::uint64_t> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    std::u32string w = nfc(e.word);
    if (w.empty()) continue;
    merged[std::move(w)] += e.frequency;
  }

  Lexicon lex;
  lex.words_.reserve(merged.size());
  for (auto& [w, f] : merged) lex.words_.push_back(w);
  std::sort(lex.words_.begin(), lex.words_.end());
  lex.frequencies_.reserve(lex.words_.size());
  for (const auto& w : lex.words_) {
    lex.frequencies_.push_back(merged[w]);
    lex.total_frequency_ += merged[w];
  }
  lex.build_indexes();
  return lex;
}

Lexicon Lexicon::from_words(const std::vector<std::u32string>& words) {
  std::vector<LexiconEntry> entries;
  entries.reserve(words.size());
  for (const auto& w : words) entries.push_back({w, 1});
  return from_entries(std::move(entries));
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  std::vector<LexiconEntry> entries;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset < bytes.size()) {
    std::size_t end = bytes.find('\n', offset);
    if (end == std::string::npos) end = bytes.size();
    ++line_no;
    std::string_view line(bytes.data() + offset, end - offset);
    const std::size_t line_offset = offset;
    offset = end + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::u32string text;
    try {
      text = utf8_decode(line);
    } catch (const Utf8Error& e) {
      const std::size_t at = line_offset + e.offset();
      throw Utf8Error(at, path.string() + ": malformed UTF-8 at byte offset " +
                              std::to_string(at));
    }

    LexiconEntry entry;
    const auto tab = text.find(U'\t');
    std::u32string word = text.substr(0, tab);
    while (!word.empty() && is_whitespace(word.back())) word.pop_back();
    while (!word.empty() && is_whitespace(word.front())) word.erase(0, 1);
    if (word.empty()) continue;
    entry.word = std::move(word);

    if (tab != std::u32string::npos) {
      const std::string field = utf8_encode(text.substr(tab + 1));
      std::uint64_t freq = 0;
      const auto* first = field.data();
      const auto* last = field.data() + field.size();
      auto [ptr, ec] = std::from_chars(first, last, freq);
      if (ec != std::errc() || ptr != last) {
        throw DataError(path.string() + ":" + std::to_string(line_no) +
                        ": bad frequency '" + field + "'");
      }
      entry.frequency = freq;
    }
    entries.push_back(std::move(entry));
  }
  return from_entries(std::move(entries));
}

void Lexicon::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out << utf8_encode(words_[i]) << '\t' << frequencies_[i] << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::uint64_t Lexicon::frequency(std::u32string_view word) const {
  auto it = ids_.find(nfc(word));
  return it == ids_.end() ? 0 : frequencies_[it->second];
}

bool Lexicon::contains(std::u32string_view word) const {
  return ids_.count(nfc(word)) != 0;
}

void Lexicon::build_indexes() {
  ids_.clear();
  ids_.reserve(words_.size());
  std::set<char32_t> letters;
  std::size_t max_len = 0;
  for (WordId id = 0; id < words_.size(); ++id) {
    ids_.emplace(words_[id], id);
    letters.insert(words_[id].begin(), words_[id].end());
    max_len = std::max(max_len, words_[id].size());
  }
  alphabet_.assign(letters.begin(), letters.end());

  deletion_index_.clear();
  for (WordId id = 0; id < words_.size(); ++id) {
    const std::u32string& w = words_[id];
    std::vector<std::uint64_t> keys{hash_key(w)};
    std::u32string del;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && w[i] == w[i - 1]) continue;  // same deletion as i - 1
      del.assign(w, 0, i);
      del.append(w, i + 1);
      keys.push_back(hash_key(del));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (auto k : keys) deletion_index_.emplace_back(k, id);
  }
  std::sort(deletion_index_.begin(), deletion_index_.end());

  using kernels::kBlockLanes;
  buckets_.assign(max_len + 1, {});
  for (std::size_t len = 0; len <= max_len; ++len) buckets_[len].length = len;
  for (WordId id = 0; id < words_.size(); ++id) {
    buckets_[words_[id].size()].ids.push_back(id);
  }
  for (auto& bucket : buckets_) {
    const std::size_t blocks = (bucket.ids.size() + kBlockLanes - 1) / kBlockLanes;
    bucket.ids.resize(blocks * kBlockLanes, kPadId);
    bucket.chars.assign(blocks * kBlockLanes * bucket.length, kernels::kPadChar);
    for (std::size_t b = 0; b < blocks; ++b) {
      char32_t* block = bucket.chars.data() + b * kBlockLanes * bucket.length;
      for (std::size_t lane = 0; lane < kBlockLanes; ++lane) {
        const WordId id = bucket.ids[b * kBlockLanes + lane];
        if (id == kPadId) continue;
        for (std::size_t p = 0; p < bucket.length; ++p) {
          block[p * kBlockLanes + lane] = words_[id][p];
        }
      }
    }
  }
}

void Lexicon::collect_distance1(std::u32string_view key,
                                std::u32string_view query,
                                std::vector<WordId>& out) const {
  const std::uint64_t h = hash_key(key);
  auto lo = std::lower_bound(
      deletion_index_.begin(), deletion_index_.end(), h,
      [](const auto& entry, std::uint64_t v) { return entry.first < v; });
  for (auto it = lo; it != deletion_index_.end() && it->first == h; ++it) {
    const std::u32string& w = words_[it->second];
    if (w != query && within_distance(w, query, 1)) out.push_back(it->second);
  }
}

std::vector<std::u32string> Lexicon::candidates_distance1(
    std::u32string_view word) const {
  const std::u32string query = nfc(word);
  std::vector<WordId> ids;
  collect_distance1(query, query, ids);
  std::u32string del;
  for (std::size_t i = 0; i < query.size(); ++i) {
    if (i > 0 && query[i] == query[i - 1]) continue;
    del.assign(query, 0, i);
    del.append(query, i + 1);
    collect_distance1(del, query, ids);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<std::u32string> out;
  out.reserve(ids.size());
  for (WordId id : ids) out.push_back(words_[id]);  // ids follow word order
  return out;
}

std::vector<std::u32string> Lexicon::candidates_adjacent_swap(
    std::u32string_view word) const {
  const std::u32string query = nfc(word);
  std::vector<std::u32string> out;
  std::u32string v;
  for (std::size_t i = 0; i + 1 < query.size(); ++i) {
    if (query[i] == query[i + 1]) continue;
    v = query;
    std::swap(v[i], v[i + 1]);
    if (contains_nfc(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WordDistance> Lexicon::words_within(std::u32string_view word,
                                                Distance k) const {
  using kernels::kBlockLanes;
  const std::u32string query = nfc(word);
  std::vector<WordDistance> out;
  const std::size_t lo = query.size() > k ? query.size() - k : 0;
  const std::size_t hi = std::min(query.size() + k, buckets_.empty() ? 0 : buckets_.size() - 1);
  std::uint32_t dist[kBlockLanes];
  const auto bound = static_cast<std::uint32_t>(k);
  for (std::size_t len = lo; len <= hi && len < buckets_.size(); ++len) {
    const LengthBucket& bucket = buckets_[len];
    const std::size_t blocks = bucket.ids.size() / kBlockLanes;
    for (std::size_t b = 0; b < blocks; ++b) {
      kernels::block_distances(query,
                               bucket.chars.data() + b * kBlockLanes * len,
                               len, bound, dist);
      for (std::size_t lane = 0; lane < kBlockLanes; ++lane) {
        const WordId id = bucket.ids[b * kBlockLanes + lane];
        if (id != kPadId && dist[lane] <= bound) {
          out.push_back({words_[id], dist[lane]});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.word < b.word;
  });
  return out;
}

}  // namespace spellfix
