#include "spellfix/ngram_scorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spellfix {

namespace {

double log_sum_exp(const std::vector<double>& xs) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : xs) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double sum = 0;
  for (double x : xs) sum += std::exp(x - hi);
  return hi + std::log(sum);
}

}  // namespace

std::string NgramModel::key(const std::uint32_t* ids, std::size_t n) {
  return std::string(reinterpret_cast<const char*>(ids), n * sizeof(std::uint32_t));
}

NgramModel NgramModel::train(const std::vector<std::vector<std::u32string>>& sentences,
                             std::size_t order) {
  if (order < 1) throw ConfigError("n-gram order must be at least 1");
  NgramModel m;
  m.order_ = order;

  // Assign ids in first-seen order, then renumber by code points so the
  // model does not depend on sentence order.
  std::vector<std::u32string> vocab;
  for (const auto& s : sentences) {
    for (const auto& t : s) {
      if (m.ids_.emplace(t, 0).second) vocab.push_back(t);
    }
  }
  std::sort(vocab.begin(), vocab.end());
  for (std::uint32_t i = 0; i < vocab.size(); ++i) m.ids_[vocab[i]] = i + 2;
  m.words_ = std::move(vocab);

  std::vector<std::uint32_t> padded;
  for (const auto& s : sentences) {
    if (s.empty()) continue;
    padded.assign(order - 1, kBos);
    for (const auto& t : s) padded.push_back(m.ids_.at(t));
    padded.push_back(kEos);
    m.token_count_ += s.size();
    for (std::size_t j = order - 1; j < padded.size(); ++j) {
      const std::uint32_t* start = padded.data() + (j + 1 - order);
      ++m.ngram_counts_[key(start, order)];
      ++m.history_counts_[key(start, order - 1)];
    }
  }
  return m;
}

std::uint32_t NgramModel::id_of(const std::u32string& word) const {
  auto it = ids_.find(word);
  return it == ids_.end() ? kUnknown : it->second;
}

double NgramModel::probability(const std::uint32_t* history, std::size_t history_len,
                               std::uint32_t word, double alpha) const {
  std::uint64_t joint = 0, hist = 0;
  const bool history_known =
      std::find(history, history + history_len, kUnknown) == history + history_len;
  if (history_known) {
    auto ht = history_counts_.find(key(history, history_len));
    if (ht != history_counts_.end()) hist = ht->second;
    if (word != kUnknown) {
      std::vector<std::uint32_t> gram(history, history + history_len);
      gram.push_back(word);
      auto jt = ngram_counts_.find(key(gram.data(), gram.size()));
      if (jt != ngram_counts_.end()) joint = jt->second;
    }
  }
  return (static_cast<double>(joint) + alpha) /
         (static_cast<double>(hist) + alpha * static_cast<double>(vocabulary_size()));
}

std::string_view to_string(NgramScorer::Normalization n) {
  return n == NgramScorer::Normalization::candidates ? "candidates" : "vocabulary";
}

NgramScorer::NgramScorer(std::shared_ptr<const NgramModel> model, Options options)
    : model_(std::move(model)), options_(options) {
  if (!model_ || model_->token_count() == 0) {
    throw ConfigError("n-gram model is empty");
  }
  if (!(options_.alpha > 0)) throw ConfigError("n-gram alpha must be positive");
}

std::string NgramScorer::name() const {
  return "ngram(order=" + std::to_string(model_->order()) + ",norm=" +
         std::string(to_string(options_.normalization)) + ")";
}

std::vector<std::uint32_t> NgramScorer::pad(const std::vector<std::u32string>& tokens) const {
  std::vector<std::uint32_t> padded(model_->order() - 1, NgramModel::kBos);
  for (const auto& t : tokens) padded.push_back(model_->id_of(t));
  padded.push_back(NgramModel::kEos);
  return padded;
}

double NgramScorer::log_weight(std::vector<std::uint32_t>& padded, std::size_t slot,
                               std::uint32_t word) const {
  const std::size_t order = model_->order();
  padded[slot] = word;
  double lw = 0;
  const std::size_t last = std::min(slot + order - 1, padded.size() - 1);
  for (std::size_t j = slot; j <= last; ++j) {
    const std::uint32_t* history = padded.data() + (j + 1 - order);
    lw += std::log(model_->probability(history, order - 1, padded[j], options_.alpha));
  }
  return lw;
}

std::vector<ScoredCandidate> NgramScorer::score(const MaskedQuery& query) const {
  std::vector<std::uint32_t> padded = pad(query.tokens);
  const std::size_t slot = query.mask_index + model_->order() - 1;

  std::vector<double> logs;
  logs.reserve(query.candidates.size());
  for (const auto& c : query.candidates) {
    logs.push_back(log_weight(padded, slot, model_->id_of(c)));
  }

  double log_z;
  if (options_.normalization == Normalization::candidates) {
    log_z = log_sum_exp(logs);
  } else {
    std::vector<double> all;
    all.reserve(model_->words().size() + query.candidates.size());
    for (std::uint32_t id = 2; id < model_->words().size() + 2; ++id) {
      all.push_back(log_weight(padded, slot, id));
    }
    for (std::size_t i = 0; i < query.candidates.size(); ++i) {
      if (model_->id_of(query.candidates[i]) == NgramModel::kUnknown) all.push_back(logs[i]);
    }
    log_z = log_sum_exp(all);
  }

  std::vector<ScoredCandidate> out;
  out.reserve(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    out.push_back({query.candidates[i], std::clamp(std::exp(logs[i] - log_z), 0.0, 1.0)});
  }
  return out;
}

std::vector<ScoredCandidate> NgramScorer::top_n(const std::vector<std::u32string>& tokens,
                                                std::size_t mask_index, std::size_t n) const {
  if (mask_index >= tokens.size()) throw ContractError("mask_index out of range");
  std::vector<std::uint32_t> padded = pad(tokens);
  const std::size_t slot = mask_index + model_->order() - 1;
  const auto& words = model_->words();
  std::vector<double> logs(words.size());
  for (std::uint32_t i = 0; i < words.size(); ++i) logs[i] = log_weight(padded, slot, i + 2);
  const double log_z = log_sum_exp(logs);

  std::vector<std::size_t> order(words.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t keep = std::min(n, order.size());
  // words are in code-point order, so index order breaks ties.
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return logs[a] != logs[b] ? logs[a] > logs[b] : a < b;
                    });
  std::vector<ScoredCandidate> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    out.push_back({words[order[i]], std::clamp(std::exp(logs[order[i]] - log_z), 0.0, 1.0)});
  }
  return out;
}

}  // namespace spellfix
