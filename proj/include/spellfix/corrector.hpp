#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellfix/confusion.hpp"
#include "spellfix/errorgen.hpp"
#include "spellfix/lexicon.hpp"
#include "spellfix/scorer.hpp"
#include "spellfix/suggestion.hpp"

namespace spellfix {

enum class Strategy { proposed, baseline_v1, baseline_v2 };
enum class DetectionMode { oracle, scan };

std::string_view to_string(Strategy s);
std::string_view to_string(DetectionMode m);
Strategy parse_strategy(std::string_view s);        // throws ConfigError
DetectionMode parse_detection_mode(std::string_view s);

struct CorrectorConfig {
  double threshold_k = 1e-5;
  Distance max_distance = 2;
  Strategy strategy = Strategy::proposed;
  DetectionMode detection_mode = DetectionMode::oracle;
  std::size_t baseline_v1_topn = 500;
  // Rethrow scorer failures instead of keeping the word.
  bool fail_on_scorer_error = false;

  // threshold in (0, 1], topn >= 1. Throws ConfigError.
  void validate() const;
};

// The sentence with position `index` replaced by the mask placeholder.
// Throws DataError when index is out of range.
MaskedQuery mask_word(const std::vector<std::u32string>& tokens, std::size_t index);

// Highest score wins; ties go to the smaller distance to `observed`, then
// to code-point order. Returns the position in `scored`.
std::size_t best_candidate(const std::vector<ScoredCandidate>& scored,
                           std::u32string_view observed);

// Non-real-word pipeline: distance-1 and adjacent-swap candidates, best
// score wins, no threshold.
Suggestion correct_nonreal(const std::vector<std::u32string>& tokens, std::size_t index,
                           const Lexicon& lexicon, const Scorer& scorer);

// Scoring half of the real-word pipeline, kept separate so that a sweep can
// re-apply many thresholds to one scoring pass.
struct RealwordScoring {
  std::size_t token_index = 0;
  std::u32string original;
  std::size_t candidate_count = 0;
  bool scorer_failed = false;
  std::optional<ScoredCandidate> best;
  Distance best_distance = 0;
};

RealwordScoring score_realword(const std::vector<std::u32string>& tokens, std::size_t index,
                               const ConfusionIndex& confusion, const Scorer& scorer);

// Replace iff best score >= threshold and distance <= max_distance.
Suggestion decide_realword(const RealwordScoring& scoring, double threshold,
                           Distance max_distance);

Suggestion correct_realword(const std::vector<std::u32string>& tokens, std::size_t index,
                            const ConfusionIndex& confusion, const Scorer& scorer,
                            const CorrectorConfig& config);

// Top-N open-vocabulary suggestions filtered to distance <= max_distance;
// the closest wins, then the model's rank.
Suggestion baseline_v1(const std::vector<std::u32string>& tokens, std::size_t index,
                       const OpenVocabularyScorer& scorer, std::size_t topn,
                       Distance max_distance = 2);

// Every dictionary word within max_distance is a candidate; best score
// wins, no threshold.
Suggestion baseline_v2(const std::vector<std::u32string>& tokens, std::size_t index,
                       const Lexicon& lexicon, const Scorer& scorer,
                       Distance max_distance = 2);

struct SentenceCorrection {
  std::vector<Suggestion> suggestions;
  std::vector<std::u32string> corrected;
};

// Position the evaluation judges: the labeled error, or for an unchanged
// record the first token with a non-empty confusion set.
std::optional<std::size_t> judged_position(const ErrorRecord& record,
                                           const ConfusionIndex& confusion);

class Corrector {
 public:
  // `open_vocabulary` is required only for baseline_v1.
  Corrector(const Lexicon& lexicon, const ConfusionIndex& confusion,
            CorrectorConfig config);

  const CorrectorConfig& config() const { return config_; }

  // Runs the configured strategy at one token.
  Suggestion correct_at(const std::vector<std::u32string>& tokens, std::size_t index,
                        const Scorer& scorer,
                        const OpenVocabularyScorer* open_vocabulary = nullptr) const;

  // Oracle mode touches only judged_position(record); scan mode every token.
  // Throws DataError when the labeled index is out of range.
  SentenceCorrection correct_record(const ErrorRecord& record, const Scorer& scorer,
                                    const OpenVocabularyScorer* open_vocabulary = nullptr) const;

  SentenceCorrection correct_tokens(const std::vector<std::u32string>& tokens,
                                    const Scorer& scorer,
                                    const OpenVocabularyScorer* open_vocabulary = nullptr) const;

 private:
  const Lexicon& lexicon_;
  const ConfusionIndex& confusion_;
  CorrectorConfig config_;
};

}  // namespace spellfix
