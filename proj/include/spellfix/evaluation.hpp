#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spellfix/confusion.hpp"
#include "spellfix/corrector.hpp"
#include "spellfix/errorgen.hpp"
#include "spellfix/records.hpp"
#include "spellfix/textnorm.hpp"

namespace spellfix {

enum class Outcome { tp, tn, fp, fn };
std::string_view to_string(Outcome o);

// TP: error fixed to the gold word. FN: error kept or replaced wrongly.
// TN / FP: no error, kept / replaced. In strip mode words are compared
// with U+200C removed.
Outcome judge(const ErrorRecord& record, const Suggestion& suggestion,
              ZwnjMode mode = ZwnjMode::preserve);

struct ConfusionCounts {
  ErrorClass cls{Category::none, ErrorType::none};
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + tn + fp + fn; }
  void add(Outcome o);
  ConfusionCounts& operator+=(const ConfusionCounts& o);
  bool operator==(const ConfusionCounts&) const = default;
};

struct MetricSet {
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;

  bool operator==(const MetricSet&) const = default;
};

MetricSet metrics(const ConfusionCounts& c);

struct Aggregate {
  MetricSet micro;
  MetricSet macro;
  // Classes that contributed to each macro mean: accuracy, precision,
  // recall, f1.
  std::array<std::size_t, 4> macro_support{};
  // Some class had an undefined metric and was left out of its mean.
  bool macro_excluded = false;
};

// Micro over summed counts; macro is the mean of defined per-class values.
Aggregate aggregate(const std::vector<ConfusionCounts>& per_class);

// Class an evaluation position is reported under. Error records use their
// label. Unchanged records use (real, relation of the probed token to its
// first confusable word); nothing when no token has a confusion set.
struct JudgeContext {
  const ConfusionIndex& confusion;
  const KeyboardAdjacency& adj;
  const HomophoneMap& hmap;
};

std::optional<ErrorClass> judged_class(const ErrorRecord& record, const JudgeContext& ctx);

// Six error classes in report order.
const std::vector<ErrorClass>& error_classes();

struct EvalReport {
  std::vector<ConfusionCounts> per_class;  // error_classes() order
  std::vector<MetricSet> per_class_metrics;
  Aggregate overall;
  ZwnjMode zwnj = ZwnjMode::preserve;
  std::size_t records = 0;
  std::size_t judged = 0;
  std::size_t unjudged = 0;
  std::size_t scorer_failures = 0;
  std::size_t sentence_exact_match = 0;
  // Free-form run metadata copied into the JSON document.
  std::map<std::string, std::string> metadata;
  std::optional<double> elapsed_minutes;
  std::optional<double> ms_per_sentence;

  const ConfusionCounts& counts(const ErrorClass& cls) const;
};

// Pairs gold records with prediction rows by sentence_id. A prediction id
// absent from gold, or a judged position without a prediction row, raises
// DataError naming the first such id.
EvalReport evaluate(const std::vector<ErrorRecord>& gold, const std::vector<PredictionRow>& rows,
                    const JudgeContext& ctx, ZwnjMode mode = ZwnjMode::preserve);

// Raw and stripped reports over the same inputs.
std::pair<EvalReport, EvalReport> zwnj_ablation(const std::vector<ErrorRecord>& gold,
                                                const std::vector<PredictionRow>& rows,
                                                const JudgeContext& ctx);

// JSON report. Undefined metrics are written as "n/a".
std::string report_to_json(const EvalReport& report);
std::string ablation_to_json(const EvalReport& raw, const EvalReport& stripped);

// Scorer used for one record. Shared scorers return the same pointer.
using ScorerProvider = std::function<std::shared_ptr<const Scorer>(const ErrorRecord&)>;

// One scorer for every record.
ScorerProvider shared_provider(std::shared_ptr<const Scorer> scorer);

// Planted-truth scorer per record: the gold word for an error record, the
// probed token itself for an unchanged one.
ScorerProvider oracle_provider(const ConfusionIndex& confusion);

struct CorrectionRun {
  std::vector<PredictionRow> rows;
  std::vector<std::int64_t> skipped;  // records with a bad labeled index
  std::size_t scorer_failures = 0;
  double mean_candidates = 0.0;
  double elapsed_seconds = 0.0;
};

// Corrects every record in input order. When the scorer is also an
// OpenVocabularyScorer it is used for baseline_v1.
CorrectionRun correct_dataset(const std::vector<ErrorRecord>& records,
                              const Corrector& corrector, const ScorerProvider& scorers,
                              std::size_t jobs = 1);

inline const std::vector<double> kDefaultThresholds{1e-1, 1e-3, 1e-5, 1e-7, 1e-9};

struct SweepPoint {
  double threshold = 0.0;
  ConfusionCounts counts;  // summed over real-word positions
  MetricSet metrics;
  std::set<std::pair<std::int64_t, std::size_t>> replaced;  // (sentence_id, token)

  bool operator==(const SweepPoint&) const = default;
};

// Real-word pipeline over every judged position holding an in-lexicon
// token. Scores once and re-applies each threshold.
std::vector<SweepPoint> threshold_sweep(const std::vector<ErrorRecord>& records,
                                        const ConfusionIndex& confusion,
                                        const ScorerProvider& scorers,
                                        const std::vector<double>& thresholds,
                                        Distance max_distance = 2, std::size_t jobs = 1);

// Same result by running the pipeline once per threshold.
std::vector<SweepPoint> threshold_sweep_rerun(const std::vector<ErrorRecord>& records,
                                              const ConfusionIndex& confusion,
                                              const ScorerProvider& scorers,
                                              const std::vector<double>& thresholds,
                                              Distance max_distance = 2, std::size_t jobs = 1);

// threshold,precision,recall,f1,tp,tn,fp,fn
std::string sweep_to_csv(const std::vector<SweepPoint>& points);

// Missed errors binned by distance between suggestion and input word
// (0, 1, 2, 3+) and by score decile ("none" without a score).
struct DiagnosticBin {
  std::string distance;
  std::string score_decile;
  std::size_t count = 0;

  bool operator==(const DiagnosticBin&) const = default;
};

std::vector<DiagnosticBin> diagnostics(const std::vector<ErrorRecord>& gold,
                                       const std::vector<PredictionRow>& rows,
                                       ZwnjMode mode = ZwnjMode::preserve);

// distance,score_decile,count
std::string diagnostics_to_csv(const std::vector<DiagnosticBin>& bins);

}  // namespace spellfix
