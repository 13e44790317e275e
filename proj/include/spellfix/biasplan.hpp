#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "spellfix/errorgen.hpp"
#include "spellfix/lexicon.hpp"
#include "spellfix/rng.hpp"

namespace spellfix {

enum class MaskAction { none, mask, random_replace, keep };

// n, m, r, k
char action_code(MaskAction a);
MaskAction parse_action_code(char c);  // throws DataError

struct MaskingConfig {
  double p_select = 0.15;
  double p_mask = 0.8;
  double p_random = 0.1;  // keep takes the rest

  void validate() const;  // throws ConfigError
};

// Whole-word plan for one record.
struct MaskingPlan {
  std::vector<MaskAction> actions;
  std::vector<bool> loss;
  // Filled only where actions[i] == random_replace.
  std::vector<std::u32string> replacements;
};

// Non-error words are selected independently with p_select; a selected
// word or the labeled error word draws mask / random_replace / keep and
// gets loss = true. The error word is never part of the selection pool.
MaskingPlan build_masking_plan(const ErrorRecord& record, const Lexicon& lexicon, Rng& rng,
                               const MaskingConfig& config = {});

// One plan per record, each from the substream (seed, sentence_id).
std::vector<MaskingPlan> build_masking_plans(const std::vector<ErrorRecord>& records,
                                             const Lexicon& lexicon, std::uint64_t seed,
                                             const MaskingConfig& config = {},
                                             std::size_t jobs = 1);

// Four TAB-separated columns per record: original tokens, corrupted
// tokens, action codes, loss flags; each column space-separated.
void emit_training_file(std::ostream& out, const std::vector<ErrorRecord>& records,
                        const std::vector<MaskingPlan>& plans);
void emit_training_file(const std::filesystem::path& path,
                        const std::vector<ErrorRecord>& records,
                        const std::vector<MaskingPlan>& plans);

struct TrainingLine {
  std::vector<std::u32string> original;
  std::vector<std::u32string> corrupted;
  std::vector<MaskAction> actions;
  std::vector<bool> loss;
};

// Parses one line and checks that the four columns align.
TrainingLine parse_training_line(std::string_view line);  // throws DataError

}  // namespace spellfix
