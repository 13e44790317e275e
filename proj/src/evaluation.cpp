#include "spellfix/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "spellfix/editdist.hpp"
#include "spellfix/error.hpp"
#include "spellfix/parallel.hpp"
#include "spellfix/unicode.hpp"

namespace spellfix {

using ojson = nlohmann::ordered_json;

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::tp: return "TP";
    case Outcome::tn: return "TN";
    case Outcome::fp: return "FP";
    case Outcome::fn: return "FN";
  }
  return "TN";
}

namespace {

bool same_word(std::u32string_view a, std::u32string_view b, ZwnjMode mode) {
  if (mode == ZwnjMode::preserve) return a == b;
  return normalize_zwnj(a, ZwnjMode::strip) == normalize_zwnj(b, ZwnjMode::strip);
}

}  // namespace

Outcome judge(const ErrorRecord& record, const Suggestion& s, ZwnjMode mode) {
  const bool changed = s.replaced() && !same_word(s.replacement, s.original, mode);
  if (!record.has_error()) return changed ? Outcome::fp : Outcome::tn;
  if (s.replaced() && same_word(s.replacement, record.original_word, mode)) return Outcome::tp;
  return Outcome::fn;
}

void ConfusionCounts::add(Outcome o) {
  switch (o) {
    case Outcome::tp: ++tp; break;
    case Outcome::tn: ++tn; break;
    case Outcome::fp: ++fp; break;
    case Outcome::fn: ++fn; break;
  }
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) {
  tp += o.tp;
  tn += o.tn;
  fp += o.fp;
  fn += o.fn;
  return *this;
}

MetricSet metrics(const ConfusionCounts& c) {
  MetricSet m;
  const auto d = [](std::uint64_t x) { return static_cast<double>(x); };
  if (c.total() > 0) m.accuracy = d(c.tp + c.tn) / d(c.total());
  if (c.tp + c.fp > 0) m.precision = d(c.tp) / d(c.tp + c.fp);
  if (c.tp + c.fn > 0) m.recall = d(c.tp) / d(c.tp + c.fn);
  if (m.precision && m.recall && *m.precision + *m.recall > 0.0) {
    m.f1 = 2.0 * *m.precision * *m.recall / (*m.precision + *m.recall);
  }
  return m;
}

Aggregate aggregate(const std::vector<ConfusionCounts>& per_class) {
  Aggregate a;
  ConfusionCounts sum;
  std::array<std::vector<double>, 4> defined;
  for (const auto& c : per_class) {
    sum += c;
    const MetricSet m = metrics(c);
    const std::array<std::optional<double>, 4> v{m.accuracy, m.precision, m.recall, m.f1};
    for (std::size_t i = 0; i < 4; ++i) {
      if (v[i]) {
        defined[i].push_back(*v[i]);
      } else {
        a.macro_excluded = true;
      }
    }
  }
  a.micro = metrics(sum);
  std::array<std::optional<double>*, 4> out{&a.macro.accuracy, &a.macro.precision,
                                            &a.macro.recall, &a.macro.f1};
  for (std::size_t i = 0; i < 4; ++i) {
    a.macro_support[i] = defined[i].size();
    if (defined[i].empty()) continue;
    // Sorted so the mean does not depend on class order.
    std::sort(defined[i].begin(), defined[i].end());
    double total = 0;
    for (double x : defined[i]) total += x;
    *out[i] = total / static_cast<double>(defined[i].size());
  }
  return a;
}

const std::vector<ErrorClass>& error_classes() {
  static const std::vector<ErrorClass> classes = [] {
    std::vector<ErrorClass> out;
    for (const auto& c : all_error_classes()) {
      if (c.first != Category::none) out.push_back(c);
    }
    return out;
  }();
  return classes;
}

std::optional<ErrorClass> judged_class(const ErrorRecord& record, const JudgeContext& ctx) {
  if (record.has_error()) return ErrorClass{record.category, record.etype};
  const auto pos = judged_position(record, ctx.confusion);
  if (!pos) return std::nullopt;
  const auto& token = record.corrupted_tokens[*pos];
  for (const auto& other : ctx.confusion.confusion_set(token)) {
    const ErrorType t = relation_type(token, other, ctx.adj, ctx.hmap);
    if (t != ErrorType::none) return ErrorClass{Category::real, t};
  }
  return std::nullopt;
}

const ConfusionCounts& EvalReport::counts(const ErrorClass& cls) const {
  for (const auto& c : per_class) {
    if (c.cls == cls) return c;
  }
  throw ConfigError("no such class: " + class_label(cls));
}

EvalReport evaluate(const std::vector<ErrorRecord>& gold, const std::vector<PredictionRow>& rows,
                    const JudgeContext& ctx, ZwnjMode mode) {
  std::unordered_map<std::int64_t, std::vector<const PredictionRow*>> by_id;
  std::unordered_set<std::int64_t> gold_ids;
  for (const auto& r : gold) {
    if (!gold_ids.insert(r.sentence_id).second) {
      throw DataError("duplicate gold sentence id " + std::to_string(r.sentence_id));
    }
  }
  for (const auto& row : rows) {
    if (!gold_ids.count(row.sentence_id)) {
      throw DataError("prediction for unknown sentence id " + std::to_string(row.sentence_id));
    }
    by_id[row.sentence_id].push_back(&row);
  }

  EvalReport report;
  report.zwnj = mode;
  report.records = gold.size();
  for (const auto& cls : error_classes()) {
    ConfusionCounts c;
    c.cls = cls;
    report.per_class.push_back(c);
  }
  auto slot = [&](const ErrorClass& cls) -> ConfusionCounts& {
    for (auto& c : report.per_class) {
      if (c.cls == cls) return c;
    }
    throw DataError("record with unknown class " + class_label(cls));
  };

  static const std::vector<const PredictionRow*> kNone;
  for (const auto& record : gold) {
    auto it = by_id.find(record.sentence_id);
    const auto& mine = it == by_id.end() ? kNone : it->second;

    std::vector<std::u32string> corrected = record.corrupted_tokens;
    for (const auto* row : mine) {
      const Suggestion& s = row->suggestion;
      if (s.token_index >= corrected.size() ||
          s.original != record.corrupted_tokens[s.token_index]) {
        throw DataError("prediction for sentence id " + std::to_string(record.sentence_id) +
                        " does not match its token " + std::to_string(s.token_index));
      }
      if (s.reason == Reason::scorer_failure) ++report.scorer_failures;
      if (s.replaced()) corrected[s.token_index] = s.replacement;
    }
    const auto original = record.original_tokens();
    bool exact = corrected.size() == original.size();
    for (std::size_t i = 0; exact && i < original.size(); ++i) {
      exact = same_word(corrected[i], original[i], mode);
    }
    if (exact) ++report.sentence_exact_match;

    const auto pos = judged_position(record, ctx.confusion);
    const auto cls = judged_class(record, ctx);
    if (!pos || !cls) {
      ++report.unjudged;
      continue;
    }
    const PredictionRow* hit = nullptr;
    for (const auto* row : mine) {
      if (row->suggestion.token_index == *pos) hit = row;
    }
    if (!hit) {
      throw DataError("no prediction at the judged position of sentence id " +
                      std::to_string(record.sentence_id));
    }
    slot(*cls).add(judge(record, hit->suggestion, mode));
    ++report.judged;
  }

  for (const auto& c : report.per_class) report.per_class_metrics.push_back(metrics(c));
  report.overall = aggregate(report.per_class);
  return report;
}

std::pair<EvalReport, EvalReport> zwnj_ablation(const std::vector<ErrorRecord>& gold,
                                                const std::vector<PredictionRow>& rows,
                                                const JudgeContext& ctx) {
  return {evaluate(gold, rows, ctx, ZwnjMode::preserve),
          evaluate(gold, rows, ctx, ZwnjMode::strip)};
}

namespace {

ojson metric_value(const std::optional<double>& v) {
  if (!v) return "n/a";
  return *v;
}

ojson metric_block(const MetricSet& m) {
  ojson j;
  j["accuracy"] = metric_value(m.accuracy);
  j["precision"] = metric_value(m.precision);
  j["recall"] = metric_value(m.recall);
  j["f1"] = metric_value(m.f1);
  return j;
}

ojson report_json(const EvalReport& r) {
  ojson j;
  j["zwnj_mode"] = r.zwnj == ZwnjMode::strip ? "strip" : "preserve";
  j["records"] = r.records;
  j["judged"] = r.judged;
  j["unjudged"] = r.unjudged;
  j["scorer_failures"] = r.scorer_failures;
  j["sentence_exact_match"] = r.sentence_exact_match;
  j["sentence_exact_match_rate"] =
      r.records ? ojson(static_cast<double>(r.sentence_exact_match) /
                        static_cast<double>(r.records))
                : ojson("n/a");
  ojson classes = ojson::array();
  for (std::size_t i = 0; i < r.per_class.size(); ++i) {
    const auto& c = r.per_class[i];
    ojson row;
    row["label"] = class_label(c.cls);
    row["category"] = to_string(c.cls.first);
    row["etype"] = to_string(c.cls.second);
    row["tp"] = c.tp;
    row["tn"] = c.tn;
    row["fp"] = c.fp;
    row["fn"] = c.fn;
    const MetricSet& m = r.per_class_metrics[i];
    row["accuracy"] = metric_value(m.accuracy);
    row["precision"] = metric_value(m.precision);
    row["recall"] = metric_value(m.recall);
    row["f1"] = metric_value(m.f1);
    classes.push_back(row);
  }
  j["classes"] = classes;
  j["micro"] = metric_block(r.overall.micro);
  ojson macro = metric_block(r.overall.macro);
  macro["support"] = {{"accuracy", r.overall.macro_support[0]},
                      {"precision", r.overall.macro_support[1]},
                      {"recall", r.overall.macro_support[2]},
                      {"f1", r.overall.macro_support[3]}};
  macro["excluded_undefined"] = r.overall.macro_excluded;
  j["macro"] = macro;
  ojson timing = ojson::object();
  if (r.elapsed_minutes) timing["minutes"] = *r.elapsed_minutes;
  if (r.ms_per_sentence) timing["ms_per_sentence"] = *r.ms_per_sentence;
  j["timing"] = timing;
  ojson meta = ojson::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  j["metadata"] = meta;
  return j;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string ablation_to_json(const EvalReport& raw, const EvalReport& stripped) {
  ojson j;
  j["raw"] = report_json(raw);
  j["stripped"] = report_json(stripped);
  return j.dump(2) + "\n";
}

ScorerProvider shared_provider(std::shared_ptr<const Scorer> scorer) {
  return [scorer = std::move(scorer)](const ErrorRecord&) { return scorer; };
}

ScorerProvider oracle_provider(const ConfusionIndex& confusion) {
  return [&confusion](const ErrorRecord& r) -> std::shared_ptr<const Scorer> {
    if (r.has_error()) return std::make_shared<OracleScorer>(r.original_word);
    const auto pos = judged_position(r, confusion);
    return std::make_shared<OracleScorer>(pos ? r.corrupted_tokens[*pos] : std::u32string());
  };
}

CorrectionRun correct_dataset(const std::vector<ErrorRecord>& records,
                              const Corrector& corrector, const ScorerProvider& scorers,
                              std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SentenceCorrection> results(records.size());
  std::vector<char> skipped(records.size(), 0);
  std::mutex serial;

  parallel_for(records.size(), jobs, [&](std::size_t i) {
    const auto scorer = scorers(records[i]);
    const auto* open = dynamic_cast<const OpenVocabularyScorer*>(scorer.get());
    std::unique_lock<std::mutex> lock(serial, std::defer_lock);
    if (!scorer->thread_safe()) lock.lock();
    try {
      results[i] = corrector.correct_record(records[i], *scorer, open);
    } catch (const DataError&) {
      skipped[i] = 1;
    }
  });

  CorrectionRun run;
  std::size_t suggestions = 0;
  std::size_t candidates = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (skipped[i]) {
      run.skipped.push_back(records[i].sentence_id);
      continue;
    }
    for (auto& s : results[i].suggestions) {
      ++suggestions;
      candidates += s.candidate_count;
      if (s.reason == Reason::scorer_failure) ++run.scorer_failures;
      run.rows.push_back({records[i].sentence_id, std::move(s)});
    }
  }
  run.mean_candidates =
      suggestions ? static_cast<double>(candidates) / static_cast<double>(suggestions) : 0.0;
  run.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

namespace {

struct SweepItem {
  const ErrorRecord* record;
  std::size_t position;
};

std::vector<SweepItem> realword_items(const std::vector<ErrorRecord>& records,
                                      const ConfusionIndex& confusion) {
  std::vector<SweepItem> items;
  for (const auto& r : records) {
    if (r.category == Category::nonreal) continue;
    if (r.has_error() && (r.error_index < 0 || static_cast<std::size_t>(r.error_index) >=
                                                   r.corrupted_tokens.size())) {
      continue;
    }
    if (auto pos = judged_position(r, confusion)) items.push_back({&r, *pos});
  }
  return items;
}

SweepPoint make_point(double threshold) {
  SweepPoint p;
  p.threshold = threshold;
  p.counts.cls = {Category::real, ErrorType::none};
  return p;
}

void record_outcome(SweepPoint& p, const SweepItem& item, const Suggestion& s) {
  p.counts.add(judge(*item.record, s));
  if (s.replaced()) p.replaced.insert({item.record->sentence_id, item.position});
}

}  // namespace

std::vector<SweepPoint> threshold_sweep(const std::vector<ErrorRecord>& records,
                                        const ConfusionIndex& confusion,
                                        const ScorerProvider& scorers,
                                        const std::vector<double>& thresholds,
                                        Distance max_distance, std::size_t jobs) {
  const auto items = realword_items(records, confusion);
  std::vector<RealwordScoring> scored(items.size());
  std::mutex serial;
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    const auto scorer = scorers(*items[i].record);
    std::unique_lock<std::mutex> lock(serial, std::defer_lock);
    if (!scorer->thread_safe()) lock.lock();
    scored[i] = score_realword(items[i].record->corrupted_tokens, items[i].position, confusion,
                               *scorer);
  });

  std::vector<SweepPoint> out;
  for (double k : thresholds) {
    SweepPoint p = make_point(k);
    for (std::size_t i = 0; i < items.size(); ++i) {
      record_outcome(p, items[i], decide_realword(scored[i], k, max_distance));
    }
    p.metrics = metrics(p.counts);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SweepPoint> threshold_sweep_rerun(const std::vector<ErrorRecord>& records,
                                              const ConfusionIndex& confusion,
                                              const ScorerProvider& scorers,
                                              const std::vector<double>& thresholds,
                                              Distance max_distance, std::size_t jobs) {
  const auto items = realword_items(records, confusion);
  std::vector<SweepPoint> out;
  std::mutex serial;
  for (double k : thresholds) {
    CorrectorConfig config;
    config.threshold_k = k;
    config.max_distance = max_distance;
    std::vector<Suggestion> suggestions(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t i) {
      const auto scorer = scorers(*items[i].record);
      std::unique_lock<std::mutex> lock(serial, std::defer_lock);
      if (!scorer->thread_safe()) lock.lock();
      suggestions[i] = correct_realword(items[i].record->corrupted_tokens, items[i].position,
                                        confusion, *scorer, config);
    });
    SweepPoint p = make_point(k);
    for (std::size_t i = 0; i < items.size(); ++i) record_outcome(p, items[i], suggestions[i]);
    p.metrics = metrics(p.counts);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::string csv_metric(const std::optional<double>& v) {
  return v ? format_score(*v) : std::string("n/a");
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << "threshold,precision,recall,f1,tp,tn,fp,fn\n";
  for (const auto& p : points) {
    out << format_score(p.threshold) << ',' << csv_metric(p.metrics.precision) << ','
        << csv_metric(p.metrics.recall) << ',' << csv_metric(p.metrics.f1) << ',' << p.counts.tp
        << ',' << p.counts.tn << ',' << p.counts.fp << ',' << p.counts.fn << '\n';
  }
  return out.str();
}

std::vector<DiagnosticBin> diagnostics(const std::vector<ErrorRecord>& gold,
                                       const std::vector<PredictionRow>& rows, ZwnjMode mode) {
  std::unordered_map<std::int64_t, std::vector<const PredictionRow*>> by_id;
  for (const auto& row : rows) by_id[row.sentence_id].push_back(&row);

  std::map<std::pair<std::string, std::string>, std::size_t> bins;
  for (const auto& record : gold) {
    if (!record.has_error()) continue;
    auto it = by_id.find(record.sentence_id);
    if (it == by_id.end()) continue;
    for (const auto* row : it->second) {
      const Suggestion& s = row->suggestion;
      if (static_cast<std::int64_t>(s.token_index) != record.error_index) continue;
      if (judge(record, s, mode) != Outcome::fn) continue;
      const Distance d = levenshtein(s.replacement, s.original);
      std::string dist = d >= 3 ? "3+" : std::to_string(d);
      std::string decile = "none";
      if (s.score) {
        const int dec = std::clamp(static_cast<int>(std::floor(*s.score * 10.0)), 0, 9);
        decile = std::to_string(dec);
      }
      ++bins[{dist, decile}];
    }
  }
  std::vector<DiagnosticBin> out;
  for (const auto& [key, count] : bins) out.push_back({key.first, key.second, count});
  return out;
}

std::string diagnostics_to_csv(const std::vector<DiagnosticBin>& bins) {
  std::ostringstream out;
  out << "distance,score_decile,count\n";
  for (const auto& b : bins) out << b.distance << ',' << b.score_decile << ',' << b.count << '\n';
  return out.str();
}

}  // namespace spellfix
