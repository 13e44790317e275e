#include "spellfix/biasplan.hpp"

#include <cmath>
#include <sstream>

#include "spellfix/error.hpp"
#include "spellfix/parallel.hpp"
#include "spellfix/records.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

char action_code(MaskAction a) {
  switch (a) {
    case MaskAction::none: return 'n';
    case MaskAction::mask: return 'm';
    case MaskAction::random_replace: return 'r';
    case MaskAction::keep: return 'k';
  }
  return 'n';
}

MaskAction parse_action_code(char c) {
  switch (c) {
    case 'n': return MaskAction::none;
    case 'm': return MaskAction::mask;
    case 'r': return MaskAction::random_replace;
    case 'k': return MaskAction::keep;
    default: break;
  }
  throw DataError(std::string("unknown action code '") + c + "'");
}

void MaskingConfig::validate() const {
  auto prob = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
  if (!prob(p_select) || !prob(p_mask) || !prob(p_random) || p_mask + p_random > 1.0 + 1e-12) {
    throw ConfigError("masking probabilities must lie in [0, 1] with mask + random <= 1");
  }
}

namespace {

MaskAction draw_action(Rng& rng, const MaskingConfig& config) {
  const double u = rng.uniform();
  if (u < config.p_mask) return MaskAction::mask;
  if (u < config.p_mask + config.p_random) return MaskAction::random_replace;
  return MaskAction::keep;
}

// Uniform lexicon word different from `avoid`; empty when none exists.
std::u32string random_word(const Lexicon& lexicon, const std::u32string& avoid, Rng& rng) {
  const std::size_t n = lexicon.size();
  if (n == 0) return {};
  const bool has_avoid = lexicon.contains_nfc(avoid);
  if (has_avoid && n == 1) return {};
  for (;;) {
    const auto& w = lexicon.word(static_cast<Lexicon::WordId>(rng.below(n)));
    if (w != avoid) return w;
  }
}

}  // namespace

MaskingPlan build_masking_plan(const ErrorRecord& record, const Lexicon& lexicon, Rng& rng,
                               const MaskingConfig& config) {
  const std::size_t n = record.corrupted_tokens.size();
  MaskingPlan plan;
  plan.actions.assign(n, MaskAction::none);
  plan.loss.assign(n, false);
  plan.replacements.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const bool is_error =
        record.has_error() && static_cast<std::int64_t>(i) == record.error_index;
    if (!is_error && !rng.bernoulli(config.p_select)) continue;
    MaskAction a = draw_action(rng, config);
    if (a == MaskAction::random_replace) {
      std::u32string w = random_word(lexicon, record.corrupted_tokens[i], rng);
      if (w.empty()) {
        a = MaskAction::keep;
      } else {
        plan.replacements[i] = std::move(w);
      }
    }
    plan.actions[i] = a;
    plan.loss[i] = true;
  }
  return plan;
}

std::vector<MaskingPlan> build_masking_plans(const std::vector<ErrorRecord>& records,
                                             const Lexicon& lexicon, std::uint64_t seed,
                                             const MaskingConfig& config, std::size_t jobs) {
  config.validate();
  std::vector<MaskingPlan> plans(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    Rng rng = Rng::substream(seed, {static_cast<std::uint64_t>(records[i].sentence_id)});
    plans[i] = build_masking_plan(records[i], lexicon, rng, config);
  });
  return plans;
}

namespace {

template <class T, class F>
void join(std::ostream& out, const std::vector<T>& items, F&& f) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << ' ';
    f(items[i]);
  }
}

}  // namespace

void emit_training_file(std::ostream& out, const std::vector<ErrorRecord>& records,
                        const std::vector<MaskingPlan>& plans) {
  if (records.size() != plans.size()) {
    throw DataError("plans do not align with records");
  }
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    const auto& plan = plans[r];
    if (plan.actions.size() != rec.corrupted_tokens.size() ||
        plan.loss.size() != rec.corrupted_tokens.size()) {
      throw DataError("plan for record " + std::to_string(rec.sentence_id) +
                      " does not align with its tokens");
    }
    const auto original = rec.original_tokens();
    join(out, original, [&](const std::u32string& t) { out << utf8_encode(t); });
    out << '\t';
    join(out, rec.corrupted_tokens, [&](const std::u32string& t) { out << utf8_encode(t); });
    out << '\t';
    join(out, plan.actions, [&](MaskAction a) { out << action_code(a); });
    out << '\t';
    for (std::size_t i = 0; i < plan.loss.size(); ++i) {
      if (i) out << ' ';
      out << (plan.loss[i] ? '1' : '0');
    }
    out << '\n';
  }
}

void emit_training_file(const std::filesystem::path& path,
                        const std::vector<ErrorRecord>& records,
                        const std::vector<MaskingPlan>& plans) {
  std::ostringstream buf;
  emit_training_file(buf, records, plans);
  write_text_file(path, buf.str());
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t sp = s.find(' ', pos);
    out.push_back(s.substr(pos, sp == s.npos ? s.npos : sp - pos));
    if (sp == s.npos) return out;
    pos = sp + 1;
  }
}

}  // namespace

TrainingLine parse_training_line(std::string_view line) {
  const auto cols = split_tabs(line);
  if (cols.size() != 4) throw DataError("expected 4 columns, got " + std::to_string(cols.size()));
  TrainingLine t;
  for (auto s : split_spaces(cols[0])) t.original.push_back(utf8_decode(s));
  for (auto s : split_spaces(cols[1])) t.corrupted.push_back(utf8_decode(s));
  for (auto s : split_spaces(cols[2])) {
    if (s.size() != 1) throw DataError("bad action code '" + std::string(s) + "'");
    t.actions.push_back(parse_action_code(s[0]));
  }
  for (auto s : split_spaces(cols[3])) {
    if (s != "0" && s != "1") throw DataError("bad loss flag '" + std::string(s) + "'");
    t.loss.push_back(s == "1");
  }
  const std::size_t n = t.original.size();
  if (t.corrupted.size() != n || t.actions.size() != n || t.loss.size() != n) {
    throw DataError("columns do not align");
  }
  return t;
}

}  // namespace spellfix
