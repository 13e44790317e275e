#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <semaphore>
#include <string>
#include <vector>

#include "spellfix/scorer.hpp"

namespace spellfix {

struct RemoteScorerConfig {
  // scheme://host:port of the scoring service.
  std::string url = "http://127.0.0.1:8000";
  std::chrono::milliseconds timeout{10000};
  // Extra attempts after the first for retryable transport failures.
  std::size_t max_retries = 3;
  std::chrono::milliseconds initial_backoff{100};
  std::size_t max_in_flight = 4;
};

// Client for the masked-LM scoring service:
//   POST /v1/score  {"tokens", "mask_index", "candidates"} -> {"scores"}
//   POST /v1/topn   {"tokens", "mask_index", "n"} -> {"candidates", "scores"}
//   GET  /v1/health -> 200 when ready
// Non-200 replies carry {"error": string}. 5xx replies and network failures
// are retried with exponential backoff; 4xx replies raise ContractError.
class RemoteScorer : public Scorer, public OpenVocabularyScorer {
 public:
  explicit RemoteScorer(RemoteScorerConfig config);
  ~RemoteScorer() override;

  std::vector<ScoredCandidate> score(const MaskedQuery& query) const override;
  std::vector<ScoredCandidate> top_n(const std::vector<std::u32string>& tokens,
                                     std::size_t mask_index, std::size_t n) const override;
  std::string name() const override { return "remote(" + config_.url + ")"; }

  // True when /v1/health answers 200. Never throws.
  bool healthy() const;

  const RemoteScorerConfig& config() const { return config_; }

 private:
  std::string post(const std::string& path, const std::string& body) const;

  RemoteScorerConfig config_;
  std::unique_ptr<std::counting_semaphore<>> in_flight_;
};

// Response decoding, exposed for contract tests. Throws
// MalformedResponseError or ContractError.
std::vector<ScoredCandidate> decode_score_response(const MaskedQuery& query,
                                                   const std::string& body);
std::string encode_score_request(const MaskedQuery& query);

}  // namespace spellfix
