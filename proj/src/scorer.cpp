#include "spellfix/scorer.hpp"

#include <cmath>
#include <unordered_set>

#include "spellfix/lexicon.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

std::string_view to_string(TransportErrorKind kind) {
  switch (kind) {
    case TransportErrorKind::timeout: return "timeout";
    case TransportErrorKind::connection_refused: return "connection_refused";
    case TransportErrorKind::connection: return "connection";
    case TransportErrorKind::http_status: return "http_status";
  }
  return "unknown";
}

void MaskedQuery::validate() const {
  if (mask_index >= tokens.size()) {
    throw ContractError("mask_index " + std::to_string(mask_index) +
                        " out of range for " + std::to_string(tokens.size()) + " tokens");
  }
  if (candidates.empty()) throw ContractError("empty candidate list");
  std::unordered_set<std::u32string> seen;
  for (const auto& c : candidates) {
    if (!seen.insert(c).second) {
      throw ContractError("duplicate candidate '" + utf8_encode(c) + "'");
    }
  }
}

std::vector<std::vector<ScoredCandidate>> Scorer::score_batch(
    std::span<const MaskedQuery> queries) const {
  std::vector<std::vector<ScoredCandidate>> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(score(q));
  return out;
}

void check_contract(const MaskedQuery& query, const std::vector<ScoredCandidate>& scores) {
  if (scores.size() != query.candidates.size()) {
    throw ContractError("backend returned " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(query.candidates.size()) +
                        " candidates");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].word != query.candidates[i]) {
      throw ContractError("score " + std::to_string(i) + " is for '" +
                          utf8_encode(scores[i].word) + "', expected '" +
                          utf8_encode(query.candidates[i]) + "'");
    }
    const double s = scores[i].score;
    if (!std::isfinite(s)) {
      throw ContractError("score " + std::to_string(i) + " is not finite");
    }
    if (s < 0.0 || s > 1.0) {
      throw ContractError("score " + std::to_string(i) + " = " + std::to_string(s) +
                          " is outside [0, 1]");
    }
  }
}

std::vector<ScoredCandidate> checked_score(const Scorer& scorer, const MaskedQuery& query) {
  query.validate();
  auto scores = scorer.score(query);
  check_contract(query, scores);
  return scores;
}

std::vector<ScoredCandidate> UnigramScorer::score(const MaskedQuery& query) const {
  std::vector<ScoredCandidate> out;
  out.reserve(query.candidates.size());
  double total = 0;
  for (const auto& c : query.candidates) {
    const std::uint64_t f = lexicon_.frequency(c);
    const double count = f > 0 ? static_cast<double>(f) : floor_;
    out.push_back({c, count});
    total += count;
  }
  for (auto& sc : out) sc.score /= total;
  return out;
}

std::vector<ScoredCandidate> OracleScorer::score(const MaskedQuery& query) const {
  std::vector<ScoredCandidate> out;
  out.reserve(query.candidates.size());
  for (const auto& c : query.candidates) out.push_back({c, c == truth_ ? 1.0 : 0.0});
  return out;
}

std::vector<ScoredCandidate> OracleScorer::top_n(const std::vector<std::u32string>&,
                                                 std::size_t, std::size_t n) const {
  if (n == 0) return {};
  return {{truth_, 1.0}};
}

}  // namespace spellfix
