#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spellfix/error.hpp"

namespace spellfix {

class Lexicon;

// Placeholder written into the masked slot of a query.
inline constexpr std::u32string_view kMaskToken = U"[MASK]";

struct MaskedQuery {
  std::vector<std::u32string> tokens;
  std::size_t mask_index = 0;
  std::vector<std::u32string> candidates;

  // mask_index in range, candidates non-empty and duplicate-free.
  // Throws ContractError.
  void validate() const;
};

struct ScoredCandidate {
  std::u32string word;
  double score = 0.0;

  bool operator==(const ScoredCandidate&) const = default;
};

// Any failure raised while scoring. The corrector keeps the word and
// records scorer_failure for every ScorerError.
class ScorerError : public Error {
 public:
  using Error::Error;
};

// The backend broke the scoring contract or rejected the request.
class ContractError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

// The response body could not be decoded.
class MalformedResponseError : public ScorerError {
 public:
  using ScorerError::ScorerError;
};

enum class TransportErrorKind { timeout, connection_refused, connection, http_status };

std::string_view to_string(TransportErrorKind kind);

// Retryable network failure.
class TransportError : public ScorerError {
 public:
  TransportError(TransportErrorKind kind, const std::string& what)
      : ScorerError(what), kind_(kind) {}
  TransportErrorKind kind() const noexcept { return kind_; }

 private:
  TransportErrorKind kind_;
};

// Scores an explicit candidate list at a masked slot. Implementations
// return exactly one score in [0, 1] per candidate, in candidate order,
// and never substitute words.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual std::vector<ScoredCandidate> score(const MaskedQuery& query) const = 0;

  // Batching is an optimization; results equal per-query calls.
  virtual std::vector<std::vector<ScoredCandidate>> score_batch(
      std::span<const MaskedQuery> queries) const;

  virtual std::string name() const = 0;

  // False when calls must be serialized by the caller.
  virtual bool thread_safe() const { return true; }
};

// Open-vocabulary suggestions at the masked slot, best first.
class OpenVocabularyScorer {
 public:
  virtual ~OpenVocabularyScorer() = default;
  virtual std::vector<ScoredCandidate> top_n(const std::vector<std::u32string>& tokens,
                                             std::size_t mask_index, std::size_t n) const = 0;
};

// Throws ContractError naming the first violation.
void check_contract(const MaskedQuery& query, const std::vector<ScoredCandidate>& scores);

// Validates the query, scores it and checks the contract.
std::vector<ScoredCandidate> checked_score(const Scorer& scorer, const MaskedQuery& query);

// Dictionary frequency prior, normalized over the candidates. Candidates
// missing from the dictionary get `floor` as their count.
class UnigramScorer : public Scorer {
 public:
  explicit UnigramScorer(const Lexicon& lexicon, double floor = 0.5)
      : lexicon_(lexicon), floor_(floor) {}

  std::vector<ScoredCandidate> score(const MaskedQuery& query) const override;
  std::string name() const override { return "unigram"; }

 private:
  const Lexicon& lexicon_;
  double floor_;
};

// Planted-truth scorer: 1 for the known correct word, 0 for everything else.
class OracleScorer : public Scorer, public OpenVocabularyScorer {
 public:
  explicit OracleScorer(std::u32string truth) : truth_(std::move(truth)) {}

  std::vector<ScoredCandidate> score(const MaskedQuery& query) const override;
  std::vector<ScoredCandidate> top_n(const std::vector<std::u32string>& tokens,
                                     std::size_t mask_index, std::size_t n) const override;
  std::string name() const override { return "oracle"; }

 private:
  std::u32string truth_;
};

}  // namespace spellfix
