#include "spellfix/corrector.hpp"

#include <algorithm>

#include "spellfix/editdist.hpp"
#include "spellfix/error.hpp"

namespace spellfix {

std::string_view to_string(Action a) {
  return a == Action::replaced ? "replaced" : "kept";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::ok: return "ok";
    case Reason::below_threshold: return "below_threshold";
    case Reason::distance_guard: return "distance_guard";
    case Reason::no_candidates: return "no_candidates";
    case Reason::scorer_failure: return "scorer_failure";
  }
  return "ok";
}

Action parse_action(std::string_view s) {
  if (s == "replaced") return Action::replaced;
  if (s == "kept") return Action::kept;
  throw DataError("unknown action '" + std::string(s) + "'");
}

Reason parse_reason(std::string_view s) {
  for (Reason r : {Reason::ok, Reason::below_threshold, Reason::distance_guard,
                   Reason::no_candidates, Reason::scorer_failure}) {
    if (s == to_string(r)) return r;
  }
  throw DataError("unknown reason '" + std::string(s) + "'");
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::proposed: return "proposed";
    case Strategy::baseline_v1: return "baseline_v1";
    case Strategy::baseline_v2: return "baseline_v2";
  }
  return "proposed";
}

std::string_view to_string(DetectionMode m) {
  return m == DetectionMode::oracle ? "oracle" : "scan";
}

Strategy parse_strategy(std::string_view s) {
  for (Strategy v : {Strategy::proposed, Strategy::baseline_v1, Strategy::baseline_v2}) {
    if (s == to_string(v)) return v;
  }
  throw ConfigError("unknown strategy '" + std::string(s) + "'");
}

DetectionMode parse_detection_mode(std::string_view s) {
  if (s == "oracle") return DetectionMode::oracle;
  if (s == "scan") return DetectionMode::scan;
  throw ConfigError("unknown detection mode '" + std::string(s) + "'");
}

void CorrectorConfig::validate() const {
  if (!(threshold_k > 0.0 && threshold_k <= 1.0)) {
    throw ConfigError("threshold must lie in (0, 1]");
  }
  if (baseline_v1_topn < 1) throw ConfigError("baseline_v1 top-n must be at least 1");
}

MaskedQuery mask_word(const std::vector<std::u32string>& tokens, std::size_t index) {
  if (index >= tokens.size()) {
    throw DataError("mask index " + std::to_string(index) + " out of range for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  MaskedQuery q;
  q.tokens = tokens;
  q.tokens[index] = std::u32string(kMaskToken);
  q.mask_index = index;
  return q;
}

std::size_t best_candidate(const std::vector<ScoredCandidate>& scored,
                           std::u32string_view observed) {
  std::size_t best = 0;
  Distance best_dist = levenshtein(scored[0].word, observed);
  for (std::size_t i = 1; i < scored.size(); ++i) {
    const Distance d = levenshtein(scored[i].word, observed);
    const auto& a = scored[i];
    const auto& b = scored[best];
    bool better = a.score > b.score;
    if (a.score == b.score) {
      better = d < best_dist || (d == best_dist && a.word < b.word);
    }
    if (better) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

namespace {

Suggestion kept(std::size_t index, const std::u32string& original, Reason reason,
                std::size_t candidates) {
  Suggestion s;
  s.token_index = index;
  s.original = original;
  s.replacement = original;
  s.action = Action::kept;
  s.reason = reason;
  s.candidate_count = candidates;
  return s;
}

// Scores the candidates and takes the best one, no threshold.
Suggestion pick_best(const std::vector<std::u32string>& tokens, std::size_t index,
                     std::vector<std::u32string> candidates, const Scorer& scorer,
                     bool rethrow) {
  const std::u32string& observed = tokens[index];
  const std::size_t count = candidates.size();
  if (candidates.empty()) return kept(index, observed, Reason::no_candidates, 0);

  MaskedQuery query = mask_word(tokens, index);
  query.candidates = std::move(candidates);
  std::vector<ScoredCandidate> scored;
  try {
    scored = checked_score(scorer, query);
  } catch (const ScorerError&) {
    if (rethrow) throw;
    return kept(index, observed, Reason::scorer_failure, count);
  }
  const ScoredCandidate& best = scored[best_candidate(scored, observed)];
  Suggestion s = kept(index, observed, Reason::ok, count);
  s.score = best.score;
  if (best.word != observed) {
    s.replacement = best.word;
    s.action = Action::replaced;
  }
  return s;
}

Suggestion nonreal_impl(const std::vector<std::u32string>& tokens, std::size_t index,
                        const Lexicon& lexicon, const Scorer& scorer, bool rethrow) {
  if (index >= tokens.size()) mask_word(tokens, index);  // throws
  std::vector<std::u32string> candidates = lexicon.candidates_distance1(tokens[index]);
  for (auto& w : lexicon.candidates_adjacent_swap(tokens[index])) {
    candidates.push_back(std::move(w));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return pick_best(tokens, index, std::move(candidates), scorer, rethrow);
}

RealwordScoring realword_scoring_impl(const std::vector<std::u32string>& tokens,
                                      std::size_t index, const ConfusionIndex& confusion,
                                      const Scorer& scorer, bool rethrow) {
  RealwordScoring r;
  MaskedQuery query = mask_word(tokens, index);
  r.token_index = index;
  r.original = tokens[index];
  query.candidates = confusion.confusion_set(r.original);
  r.candidate_count = query.candidates.size();
  if (query.candidates.empty()) return r;
  std::vector<ScoredCandidate> scored;
  try {
    scored = checked_score(scorer, query);
  } catch (const ScorerError&) {
    if (rethrow) throw;
    r.scorer_failed = true;
    return r;
  }
  r.best = scored[best_candidate(scored, r.original)];
  r.best_distance = levenshtein(r.best->word, r.original);
  return r;
}

Suggestion baseline_v1_impl(const std::vector<std::u32string>& tokens, std::size_t index,
                            const OpenVocabularyScorer& scorer, std::size_t topn,
                            Distance max_distance, bool rethrow) {
  if (index >= tokens.size()) mask_word(tokens, index);  // throws
  const std::u32string& observed = tokens[index];
  std::vector<ScoredCandidate> ranked;
  try {
    ranked = scorer.top_n(mask_word(tokens, index).tokens, index, topn);
  } catch (const ScorerError&) {
    if (rethrow) throw;
    return kept(index, observed, Reason::scorer_failure, 0);
  }
  std::optional<std::size_t> best;
  Distance best_dist = 0;
  for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
    const Distance d = levenshtein(ranked[rank].word, observed);
    if (d > max_distance) continue;
    if (!best || d < best_dist) {
      best = rank;
      best_dist = d;
    }
  }
  if (!best) return kept(index, observed, Reason::no_candidates, ranked.size());
  Suggestion s = kept(index, observed, Reason::ok, ranked.size());
  s.score = ranked[*best].score;
  if (ranked[*best].word != observed) {
    s.replacement = ranked[*best].word;
    s.action = Action::replaced;
  }
  return s;
}

Suggestion baseline_v2_impl(const std::vector<std::u32string>& tokens, std::size_t index,
                            const Lexicon& lexicon, const Scorer& scorer,
                            Distance max_distance, bool rethrow) {
  if (index >= tokens.size()) mask_word(tokens, index);  // throws
  std::vector<std::u32string> candidates;
  for (auto& wd : lexicon.words_within(tokens[index], max_distance)) {
    candidates.push_back(std::move(wd.word));
  }
  return pick_best(tokens, index, std::move(candidates), scorer, rethrow);
}

}  // namespace

Suggestion correct_nonreal(const std::vector<std::u32string>& tokens, std::size_t index,
                           const Lexicon& lexicon, const Scorer& scorer) {
  return nonreal_impl(tokens, index, lexicon, scorer, false);
}

RealwordScoring score_realword(const std::vector<std::u32string>& tokens, std::size_t index,
                               const ConfusionIndex& confusion, const Scorer& scorer) {
  return realword_scoring_impl(tokens, index, confusion, scorer, false);
}

Suggestion decide_realword(const RealwordScoring& scoring, double threshold,
                           Distance max_distance) {
  const std::size_t idx = scoring.token_index;
  if (scoring.scorer_failed) {
    return kept(idx, scoring.original, Reason::scorer_failure, scoring.candidate_count);
  }
  if (!scoring.best) {
    return kept(idx, scoring.original, Reason::no_candidates, scoring.candidate_count);
  }
  Suggestion s = kept(idx, scoring.original, Reason::ok, scoring.candidate_count);
  s.score = scoring.best->score;
  if (scoring.best->score < threshold) {
    s.reason = Reason::below_threshold;
  } else if (scoring.best_distance > max_distance) {
    s.reason = Reason::distance_guard;
  } else {
    s.replacement = scoring.best->word;
    s.action = Action::replaced;
  }
  return s;
}

Suggestion correct_realword(const std::vector<std::u32string>& tokens, std::size_t index,
                            const ConfusionIndex& confusion, const Scorer& scorer,
                            const CorrectorConfig& config) {
  return decide_realword(
      realword_scoring_impl(tokens, index, confusion, scorer, config.fail_on_scorer_error),
      config.threshold_k, config.max_distance);
}

Suggestion baseline_v1(const std::vector<std::u32string>& tokens, std::size_t index,
                       const OpenVocabularyScorer& scorer, std::size_t topn,
                       Distance max_distance) {
  return baseline_v1_impl(tokens, index, scorer, topn, max_distance, false);
}

Suggestion baseline_v2(const std::vector<std::u32string>& tokens, std::size_t index,
                       const Lexicon& lexicon, const Scorer& scorer, Distance max_distance) {
  return baseline_v2_impl(tokens, index, lexicon, scorer, max_distance, false);
}

std::optional<std::size_t> judged_position(const ErrorRecord& record,
                                           const ConfusionIndex& confusion) {
  if (record.has_error()) return static_cast<std::size_t>(record.error_index);
  for (std::size_t i = 0; i < record.corrupted_tokens.size(); ++i) {
    if (!confusion.confusion_set(record.corrupted_tokens[i]).empty()) return i;
  }
  return std::nullopt;
}

Corrector::Corrector(const Lexicon& lexicon, const ConfusionIndex& confusion,
                     CorrectorConfig config)
    : lexicon_(lexicon), confusion_(confusion), config_(config) {
  config_.validate();
  if (lexicon_.empty()) throw ConfigError("corrector needs a non-empty lexicon");
}

Suggestion Corrector::correct_at(const std::vector<std::u32string>& tokens, std::size_t index,
                                 const Scorer& scorer,
                                 const OpenVocabularyScorer* open_vocabulary) const {
  const bool rethrow = config_.fail_on_scorer_error;
  if (index >= tokens.size()) mask_word(tokens, index);  // throws
  switch (config_.strategy) {
    case Strategy::baseline_v1:
      if (!open_vocabulary) throw ConfigError("baseline_v1 needs an open-vocabulary scorer");
      return baseline_v1_impl(tokens, index, *open_vocabulary, config_.baseline_v1_topn,
                              config_.max_distance, rethrow);
    case Strategy::baseline_v2:
      return baseline_v2_impl(tokens, index, lexicon_, scorer, config_.max_distance, rethrow);
    case Strategy::proposed:
      break;
  }
  if (!lexicon_.contains(tokens[index])) {
    return nonreal_impl(tokens, index, lexicon_, scorer, rethrow);
  }
  return correct_realword(tokens, index, confusion_, scorer, config_);
}

namespace {

std::vector<std::u32string> apply_suggestions(std::vector<std::u32string> tokens,
                                  const std::vector<Suggestion>& suggestions) {
  for (const auto& s : suggestions) {
    if (s.replaced()) tokens[s.token_index] = s.replacement;
  }
  return tokens;
}

}  // namespace

SentenceCorrection Corrector::correct_record(const ErrorRecord& record, const Scorer& scorer,
                                             const OpenVocabularyScorer* open_vocabulary) const {
  if (record.has_error() &&
      (record.error_index < 0 ||
       static_cast<std::size_t>(record.error_index) >= record.corrupted_tokens.size())) {
    throw DataError("record " + std::to_string(record.sentence_id) + ": error index " +
                    std::to_string(record.error_index) + " out of range");
  }
  if (config_.detection_mode == DetectionMode::scan) {
    return correct_tokens(record.corrupted_tokens, scorer, open_vocabulary);
  }
  SentenceCorrection out;
  if (auto pos = judged_position(record, confusion_)) {
    out.suggestions.push_back(correct_at(record.corrupted_tokens, *pos, scorer, open_vocabulary));
  }
  out.corrected = apply_suggestions(record.corrupted_tokens, out.suggestions);
  return out;
}

SentenceCorrection Corrector::correct_tokens(const std::vector<std::u32string>& tokens,
                                             const Scorer& scorer,
                                             const OpenVocabularyScorer* open_vocabulary) const {
  SentenceCorrection out;
  out.suggestions.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.suggestions.push_back(correct_at(tokens, i, scorer, open_vocabulary));
  }
  out.corrected = apply_suggestions(tokens, out.suggestions);
  return out;
}

}  // namespace spellfix
