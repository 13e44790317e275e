#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace spellfix {

enum class Action { replaced, kept };
enum class Reason { ok, below_threshold, distance_guard, no_candidates, scorer_failure };

std::string_view to_string(Action a);
std::string_view to_string(Reason r);
Action parse_action(std::string_view s);  // throws DataError
Reason parse_reason(std::string_view s);  // throws DataError

// The corrector's decision for one token. kept <=> replacement == original.
struct Suggestion {
  std::size_t token_index = 0;
  std::u32string original;
  std::u32string replacement;
  Action action = Action::kept;
  std::optional<double> score;
  Reason reason = Reason::ok;
  // Candidates handed to the scorer (not serialized).
  std::size_t candidate_count = 0;

  bool replaced() const { return action == Action::replaced; }
};

}  // namespace spellfix
