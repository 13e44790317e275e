#include "spellfix/errorgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "spellfix/confusion.hpp"
#include "spellfix/editdist.hpp"
#include "spellfix/error.hpp"
#include "spellfix/parallel.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::none: return "none";
    case Category::real: return "real";
    case Category::nonreal: return "nonreal";
  }
  return "none";
}

std::string_view to_string(ErrorType t) {
  switch (t) {
    case ErrorType::none: return "none";
    case ErrorType::keyboard: return "keyboard";
    case ErrorType::substitution: return "substitution";
    case ErrorType::homophone: return "homophone";
  }
  return "none";
}

Category parse_category(std::string_view s) {
  if (s == "none") return Category::none;
  if (s == "real") return Category::real;
  if (s == "nonreal") return Category::nonreal;
  throw DataError("unknown category '" + std::string(s) + "'");
}

ErrorType parse_error_type(std::string_view s) {
  if (s == "none") return ErrorType::none;
  if (s == "keyboard") return ErrorType::keyboard;
  if (s == "substitution") return ErrorType::substitution;
  if (s == "homophone") return ErrorType::homophone;
  throw DataError("unknown error type '" + std::string(s) + "'");
}

const std::vector<ErrorClass>& all_error_classes() {
  static const std::vector<ErrorClass> kClasses{
      {Category::real, ErrorType::homophone},
      {Category::real, ErrorType::keyboard},
      {Category::real, ErrorType::substitution},
      {Category::nonreal, ErrorType::homophone},
      {Category::nonreal, ErrorType::keyboard},
      {Category::nonreal, ErrorType::substitution},
      {Category::none, ErrorType::none},
  };
  return kClasses;
}

std::string class_label(const ErrorClass& cls) {
  return std::string(to_string(cls.first)) + "/" + std::string(to_string(cls.second));
}

namespace {

std::vector<std::u32string> substitution_variants(std::u32string_view word,
                                                  const LetterMap& map) {
  std::vector<std::u32string> out;
  std::u32string v(word);
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (char32_t n : map.neighbors(word[i])) {
      v[i] = n;
      out.push_back(v);
    }
    v[i] = word[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::u32string> keyboard_variants(std::u32string_view word,
                                              const KeyboardAdjacency& adj) {
  return substitution_variants(word, adj);
}

std::vector<std::u32string> homophone_variants(std::u32string_view word,
                                               const HomophoneMap& hmap) {
  return substitution_variants(word, hmap);
}

std::vector<std::u32string> swap_variants(std::u32string_view word) {
  std::vector<std::u32string> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1]) continue;
    std::u32string v(word);
    std::swap(v[i], v[i + 1]);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Category classify_variant(std::u32string_view variant, const Lexicon& lexicon) {
  return lexicon.contains(variant) ? Category::real : Category::nonreal;
}

ErrorType relation_type(std::u32string_view from, std::u32string_view to,
                        const KeyboardAdjacency& adj, const HomophoneMap& hmap) {
  const std::size_t pos = single_substitution_position(from, to);
  if (pos != std::u32string_view::npos) {
    if (hmap.related(from[pos], to[pos])) return ErrorType::homophone;
    if (adj.related(from[pos], to[pos])) return ErrorType::keyboard;
    return ErrorType::none;
  }
  if (is_adjacent_transposition(from, to)) return ErrorType::substitution;
  return ErrorType::none;
}

std::vector<std::u32string> ErrorRecord::original_tokens() const {
  std::vector<std::u32string> tokens = corrupted_tokens;
  if (error_index >= 0 && static_cast<std::size_t>(error_index) < tokens.size()) {
    tokens[static_cast<std::size_t>(error_index)] = original_word;
  }
  return tokens;
}

void CorruptionConfig::validate() const {
  auto prob = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError(std::string(name) + " must lie in [0, 1]");
    }
  };
  prob(p_unchanged, "p_unchanged");
  prob(p_homophone_real, "p_homophone_real");
  prob(p_real_branch, "p_real_branch");
  double real_sum = 0, nonreal_sum = 0;
  for (double p : real_split) { prob(p, "real_split"); real_sum += p; }
  for (double p : nonreal_split) { prob(p, "nonreal_split"); nonreal_sum += p; }
  if (std::abs(real_sum - 1.0) > 1e-9) throw ConfigError("real_split must sum to 1");
  if (std::abs(nonreal_sum - 1.0) > 1e-9) throw ConfigError("nonreal_split must sum to 1");
  if (repetitions == 0) throw ConfigError("repetitions must be positive");
}

namespace {

enum Cell : std::size_t {
  kRealKeyboard,
  kRealSubstitution,
  kNonrealKeyboard,
  kNonrealSubstitution,
  kNonrealHomophone,
  kRealHomophone,
  kCellCount
};

constexpr std::array<Cell, kCellCount> kFallthrough{
    kRealKeyboard,        kRealSubstitution, kNonrealKeyboard,
    kNonrealSubstitution, kNonrealHomophone, kRealHomophone};

ErrorClass cell_class(Cell cell) {
  switch (cell) {
    case kRealKeyboard: return {Category::real, ErrorType::keyboard};
    case kRealSubstitution: return {Category::real, ErrorType::substitution};
    case kNonrealKeyboard: return {Category::nonreal, ErrorType::keyboard};
    case kNonrealSubstitution: return {Category::nonreal, ErrorType::substitution};
    case kNonrealHomophone: return {Category::nonreal, ErrorType::homophone};
    case kRealHomophone: return {Category::real, ErrorType::homophone};
    default: break;
  }
  return {Category::none, ErrorType::none};
}

// variants[cell][token] for one sentence.
using VariantTable = std::array<std::vector<std::vector<std::u32string>>, kCellCount>;

VariantTable variant_table(const Sentence& sentence, const Lexicon& lexicon,
                           const KeyboardAdjacency& adj, const HomophoneMap& hmap) {
  VariantTable table;
  for (auto& column : table) column.resize(sentence.tokens.size());
  auto split = [&](std::vector<std::u32string> variants, std::size_t token,
                   Cell real_cell, Cell nonreal_cell) {
    for (auto& v : variants) {
      const Cell cell = lexicon.contains(v) ? real_cell : nonreal_cell;
      table[cell][token].push_back(std::move(v));
    }
  };
  for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
    const std::u32string& w = sentence.tokens[t];
    split(keyboard_variants(w, adj), t, kRealKeyboard, kNonrealKeyboard);
    split(swap_variants(w), t, kRealSubstitution, kNonrealSubstitution);
    split(homophone_variants(w, hmap), t, kRealHomophone, kNonrealHomophone);
  }
  return table;
}

bool feasible(const VariantTable& table, Cell cell) {
  const auto& column = table[cell];
  return std::any_of(column.begin(), column.end(),
                     [](const auto& v) { return !v.empty(); });
}

}  // namespace

InjectResult inject_error(const Sentence& sentence, std::int64_t sentence_id,
                          const CorruptionConfig& config, const Lexicon& lexicon,
                          const KeyboardAdjacency& adj, const HomophoneMap& hmap,
                          Rng& rng) {
  InjectResult result;
  ErrorRecord& rec = result.record;
  rec.sentence_id = sentence_id;
  rec.corrupted_tokens = sentence.tokens;

  if (rng.uniform() < config.p_unchanged) return result;

  const VariantTable table = variant_table(sentence, lexicon, adj, hmap);

  Cell chosen = kCellCount;
  if (feasible(table, kRealHomophone) && rng.uniform() < config.p_homophone_real) {
    chosen = kRealHomophone;
  } else if (rng.uniform() < config.p_real_branch) {
    chosen = rng.uniform() < config.real_split[0] ? kRealKeyboard : kRealSubstitution;
  } else {
    const double u = rng.uniform();
    if (u < config.nonreal_split[0]) {
      chosen = kNonrealKeyboard;
    } else if (u < config.nonreal_split[0] + config.nonreal_split[1]) {
      chosen = kNonrealSubstitution;
    } else {
      chosen = kNonrealHomophone;
    }
  }

  if (!feasible(table, chosen)) {
    chosen = kCellCount;
    for (Cell c : kFallthrough) {
      if (feasible(table, c)) {
        chosen = c;
        break;
      }
    }
  }
  if (chosen == kCellCount) {
    result.degraded = true;
    return result;
  }

  std::vector<std::size_t> eligible;
  for (std::size_t t = 0; t < table[chosen].size(); ++t) {
    if (!table[chosen][t].empty()) eligible.push_back(t);
  }
  const std::size_t target = eligible[rng.below(eligible.size())];
  const auto& variants = table[chosen][target];
  const std::u32string& variant = variants[rng.below(variants.size())];

  const auto [category, etype] = cell_class(chosen);
  rec.error_index = static_cast<std::int64_t>(target);
  rec.original_word = sentence.tokens[target];
  rec.corrupted_word = variant;
  rec.corrupted_tokens[target] = variant;
  rec.category = category;
  rec.etype = etype;
  return result;
}

PrunedCorpus prune_corpus(const std::filesystem::path& corpus,
                          const Lexicon& lexicon, std::ostream* rejects) {
  std::ifstream in(corpus, std::ios::binary);
  if (!in) throw IoError("cannot open " + corpus.string());

  PrunedCorpus out;
  std::string line;
  while (std::getline(in, line)) {
    ++out.stats.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::u32string text;
    try {
      text = utf8_decode(line);
    } catch (const Utf8Error& e) {
      throw DataError(corpus.string() + ":" + std::to_string(out.stats.lines) +
                      ": " + e.what());
    }
    PruneResult r = prune_line(text, lexicon);
    if (r.accepted()) {
      ++out.stats.accepted;
      out.sentences.push_back(std::move(*r.sentence));
      continue;
    }
    switch (*r.reason) {
      case RejectReason::oov: ++out.stats.oov; break;
      case RejectReason::too_short: ++out.stats.too_short; break;
      case RejectReason::too_long: ++out.stats.too_long; break;
    }
    if (rejects) {
      *rejects << out.stats.lines << '\t' << to_string(*r.reason) << '\t' << line << '\n';
    }
  }
  if (in.bad()) throw IoError("read failed: " + corpus.string());
  return out;
}

std::map<ErrorClass, std::size_t> tally(const std::vector<ErrorRecord>& records) {
  std::map<ErrorClass, std::size_t> cells;
  for (const auto& cls : all_error_classes()) cells[cls] = 0;
  for (const auto& r : records) ++cells[{r.category, r.etype}];
  return cells;
}

Dataset build_dataset(const std::vector<Sentence>& sentences,
                      const CorruptionConfig& config, const Lexicon& lexicon,
                      const KeyboardAdjacency& adj, const HomophoneMap& hmap,
                      std::size_t jobs) {
  config.validate();
  if (sentences.empty()) throw DataError("pruned corpus is empty");

  const std::size_t n = sentences.size();
  Dataset ds;
  ds.records.resize(n * config.repetitions);
  std::vector<char> degraded(ds.records.size(), 0);
  parallel_for(ds.records.size(), jobs, [&](std::size_t slot) {
    const std::size_t pass = slot / n;
    const std::size_t k = slot % n;
    Rng rng = Rng::substream(config.seed, {k, pass});
    InjectResult r = inject_error(sentences[k], static_cast<std::int64_t>(slot),
                                  config, lexicon, adj, hmap, rng);
    ds.records[slot] = std::move(r.record);
    degraded[slot] = r.degraded ? 1 : 0;
  });

  ds.stats.cells = tally(ds.records);
  ds.stats.records = ds.records.size();
  ds.stats.degraded = static_cast<std::size_t>(std::count(degraded.begin(), degraded.end(), 1));
  ds.stats.repetitions = config.repetitions;
  ds.stats.pruning.accepted = n;
  ds.stats.pruning.lines = n;
  return ds;
}

Dataset build_dataset(const std::filesystem::path& corpus,
                      const CorruptionConfig& config, const Lexicon& lexicon,
                      const KeyboardAdjacency& adj, const HomophoneMap& hmap,
                      std::size_t jobs, std::ostream* rejects) {
  config.validate();
  PrunedCorpus pruned = prune_corpus(corpus, lexicon, rejects);
  if (pruned.sentences.empty()) {
    throw DataError("no line of " + corpus.string() + " survived pruning");
  }
  Dataset ds = build_dataset(pruned.sentences, config, lexicon, adj, hmap, jobs);
  ds.stats.pruning = pruned.stats;
  return ds;
}

void write_stats(const std::filesystem::path& path, const DatasetStats& stats) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());

  auto label = [](const ErrorClass& cls) -> std::string {
    if (cls.first == Category::none) return "Total number of correct sentences";
    std::string cat = cls.first == Category::real ? "Real-word" : "Non-real-word";
    std::string type(to_string(cls.second));
    type[0] = static_cast<char>(type[0] - 'a' + 'A');
    return "Total number of sentences with " + cat + " " + type + " error";
  };

  out << "label\tcategory\tetype\tcount\n";
  out << "Total number of sentences\tall\tall\t" << stats.records << '\n';
  for (const auto& cls : all_error_classes()) {
    auto it = stats.cells.find(cls);
    const std::size_t count = it == stats.cells.end() ? 0 : it->second;
    out << label(cls) << '\t' << to_string(cls.first) << '\t'
        << to_string(cls.second) << '\t' << count << '\n';
  }
  out << "Corpus lines read\tpruning\tlines\t" << stats.pruning.lines << '\n';
  out << "Lines accepted\tpruning\taccepted\t" << stats.pruning.accepted << '\n';
  out << "Lines rejected (oov)\tpruning\toov\t" << stats.pruning.oov << '\n';
  out << "Lines rejected (too_short)\tpruning\ttoo_short\t" << stats.pruning.too_short << '\n';
  out << "Lines rejected (too_long)\tpruning\ttoo_long\t" << stats.pruning.too_long << '\n';
  out << "Repetitions\trun\trepetitions\t" << stats.repetitions << '\n';
  out << "Infeasible corruptions left unchanged\trun\tdegraded\t" << stats.degraded << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<ErrorRecord> eval_retention_filter(std::vector<ErrorRecord> records,
                                               const ConfusionIndex& index) {
  std::vector<ErrorRecord> kept;
  kept.reserve(records.size());
  for (auto& r : records) {
    bool keep = r.has_error();
    if (!keep) {
      keep = std::any_of(r.corrupted_tokens.begin(), r.corrupted_tokens.end(),
                         [&](const std::u32string& t) { return !index.confusion_set(t).empty(); });
    }
    if (keep) kept.push_back(std::move(r));
  }
  return kept;
}

}  // namespace spellfix
