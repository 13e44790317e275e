#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "spellfix/scorer.hpp"

namespace spellfix {

// Word n-gram counts over sentences padded with order-1 start markers and
// one end marker. No backoff; unseen events fall to the additive floor.
class NgramModel {
 public:
  static NgramModel train(const std::vector<std::vector<std::u32string>>& sentences,
                          std::size_t order = 2);

  std::size_t order() const { return order_; }
  // Distinct words plus the end marker.
  std::size_t vocabulary_size() const { return words_.size() + 1; }
  const std::vector<std::u32string>& words() const { return words_; }
  std::uint64_t token_count() const { return token_count_; }

  // Additively smoothed P(word | history); ids from id_of().
  double probability(const std::uint32_t* history, std::size_t history_len,
                     std::uint32_t word, double alpha) const;

  static constexpr std::uint32_t kBos = 0;
  static constexpr std::uint32_t kEos = 1;
  static constexpr std::uint32_t kUnknown = 0xFFFFFFFFu;
  std::uint32_t id_of(const std::u32string& word) const;

 private:
  static std::string key(const std::uint32_t* ids, std::size_t n);

  std::size_t order_ = 2;
  std::vector<std::u32string> words_;                        // id - 2
  std::unordered_map<std::u32string, std::uint32_t> ids_;
  std::unordered_map<std::string, std::uint64_t> ngram_counts_;    // full n-grams
  std::unordered_map<std::string, std::uint64_t> history_counts_;  // (n-1)-gram histories
  std::uint64_t token_count_ = 0;
};

// n-gram stand-in for the masked language model:
// score(c) ∝ P(c | left context) × P(right context | c).
//
// With Normalization::candidates the scores sum to 1 over the candidate
// list, so thresholds compare relative preferences. With
// Normalization::vocabulary the divisor runs over the whole vocabulary,
// which gives an absolute slot probability like a masked LM's softmax.
class NgramScorer : public Scorer, public OpenVocabularyScorer {
 public:
  enum class Normalization { candidates, vocabulary };

  struct Options {
    double alpha = 1.0;
    Normalization normalization = Normalization::candidates;
  };

  // Throws ConfigError when the model saw no tokens.
  NgramScorer(std::shared_ptr<const NgramModel> model, Options options);
  explicit NgramScorer(std::shared_ptr<const NgramModel> model)
      : NgramScorer(std::move(model), Options{}) {}

  std::vector<ScoredCandidate> score(const MaskedQuery& query) const override;

  // Whole vocabulary ranked at the slot, normalized over the vocabulary.
  std::vector<ScoredCandidate> top_n(const std::vector<std::u32string>& tokens,
                                     std::size_t mask_index, std::size_t n) const override;

  std::string name() const override;

 private:
  // log of the unnormalized score for each word id at the slot.
  double log_weight(std::vector<std::uint32_t>& padded, std::size_t slot,
                    std::uint32_t word) const;
  std::vector<std::uint32_t> pad(const std::vector<std::u32string>& tokens) const;

  std::shared_ptr<const NgramModel> model_;
  Options options_;
};

std::string_view to_string(NgramScorer::Normalization n);

}  // namespace spellfix
