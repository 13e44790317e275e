#include "spellfix_cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spellfix/biasplan.hpp"
#include "spellfix/confusion.hpp"
#include "spellfix/corrector.hpp"
#include "spellfix/error.hpp"
#include "spellfix/errorgen.hpp"
#include "spellfix/evaluation.hpp"
#include "spellfix/letter_map.hpp"
#include "spellfix/lexicon.hpp"
#include "spellfix/ngram_scorer.hpp"
#include "spellfix/parallel.hpp"
#include "spellfix/records.hpp"
#include "spellfix/remote_scorer.hpp"
#include "spellfix/textnorm.hpp"
#include "spellfix/unicode.hpp"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace spellfix::cli {

namespace {

constexpr int kArtifactVersion = 1;

// Index directory written by `build`.
struct Artifacts {
  Lexicon lexicon;
  KeyboardAdjacency adj;
  HomophoneMap hmap;
  ConfusionIndex confusion;
};

Artifacts load_artifacts(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("index directory not found: " + dir.string());
  Artifacts a;
  a.lexicon = Lexicon::load(dir / "lexicon.tsv");
  a.adj = LetterMap::load(dir / "adjacency.tsv");
  a.hmap = LetterMap::load(dir / "homophones.tsv");
  const fs::path bin = dir / "confusion.bin";
  a.confusion = ConfusionIndex::load(fs::exists(bin) ? bin : dir / "confusion.tsv");
  return a;
}

std::string env_name(const std::string& flag) {
  std::string out = "SPELLFIX_";
  for (char c : flag.substr(2)) out += c == '-' ? '_' : static_cast<char>(std::toupper(c));
  return out;
}

template <class T>
CLI::Option* flag_opt(CLI::App* app, const std::string& name, T& var, const std::string& help) {
  return app->add_option(name, var, help)->envname(env_name(name));
}

struct ScorerOptions {
  std::string scorer = "ngram";
  std::string lm_corpus;
  std::size_t ngram_order = 2;
  double ngram_alpha = 1.0;
  std::string ngram_norm = "candidates";
  double unigram_floor = 0.5;
  std::string remote_url = "http://127.0.0.1:8000";
  int remote_timeout_ms = 10000;
  std::size_t remote_retries = 3;
  std::size_t remote_in_flight = 4;
};

void add_scorer_options(CLI::App* app, ScorerOptions& o) {
  flag_opt(app, "--scorer", o.scorer, "Scoring backend")
      ->check(CLI::IsMember({"ngram", "unigram", "oracle", "remote"}));
  flag_opt(app, "--lm-corpus", o.lm_corpus, "Text corpus for the n-gram scorer");
  flag_opt(app, "--ngram-order", o.ngram_order, "n-gram order")->check(CLI::Range(1, 5));
  flag_opt(app, "--ngram-alpha", o.ngram_alpha, "Additive smoothing constant");
  flag_opt(app, "--ngram-norm", o.ngram_norm,
           "Divide by the candidate set or by the whole vocabulary")
      ->check(CLI::IsMember({"candidates", "vocabulary"}));
  flag_opt(app, "--unigram-floor", o.unigram_floor, "Count for words outside the dictionary");
  flag_opt(app, "--remote-url", o.remote_url, "Scoring service base URL");
  flag_opt(app, "--remote-timeout-ms", o.remote_timeout_ms, "Per-request timeout");
  flag_opt(app, "--remote-retries", o.remote_retries, "Retries after a transport failure");
  flag_opt(app, "--remote-in-flight", o.remote_in_flight, "Concurrent requests")
      ->check(CLI::PositiveNumber);
}

ojson scorer_json(const ScorerOptions& o) {
  ojson j;
  j["scorer"] = o.scorer;
  if (o.scorer == "ngram") {
    j["lm_corpus"] = o.lm_corpus;
    j["ngram_order"] = o.ngram_order;
    j["ngram_alpha"] = o.ngram_alpha;
    j["ngram_norm"] = o.ngram_norm;
    j["threshold_semantics"] = o.ngram_norm == "candidates"
                                   ? "relative: scores sum to 1 over the candidates"
                                   : "absolute: slot probability over the vocabulary";
  } else if (o.scorer == "unigram") {
    j["unigram_floor"] = o.unigram_floor;
    j["threshold_semantics"] = "relative: scores sum to 1 over the candidates";
  } else if (o.scorer == "remote") {
    j["remote_url"] = o.remote_url;
    j["remote_timeout_ms"] = o.remote_timeout_ms;
    j["remote_retries"] = o.remote_retries;
    j["remote_in_flight"] = o.remote_in_flight;
    j["threshold_semantics"] = "absolute: model probability";
  } else {
    j["threshold_semantics"] = "oracle: 1 for the planted word, 0 otherwise";
  }
  return j;
}

std::vector<std::vector<std::u32string>> read_lm_corpus(const fs::path& path) {
  std::vector<std::vector<std::u32string>> sentences;
  for_each_line(path, [&](std::size_t, std::string_view line) {
    auto tokens = tokenize(utf8_decode(line)).tokens;
    if (!tokens.empty()) sentences.push_back(std::move(tokens));
  });
  return sentences;
}

ScorerProvider make_provider(const ScorerOptions& o, const Artifacts& a,
                             DetectionMode mode) {
  if (o.scorer == "oracle") {
    if (mode != DetectionMode::oracle) {
      throw ConfigError("the oracle scorer needs --mode oracle");
    }
    return oracle_provider(a.confusion);
  }
  if (o.scorer == "unigram") {
    return shared_provider(std::make_shared<UnigramScorer>(a.lexicon, o.unigram_floor));
  }
  if (o.scorer == "remote") {
    RemoteScorerConfig rc;
    rc.url = o.remote_url;
    rc.timeout = std::chrono::milliseconds(o.remote_timeout_ms);
    rc.max_retries = o.remote_retries;
    rc.max_in_flight = o.remote_in_flight;
    return shared_provider(std::make_shared<RemoteScorer>(rc));
  }
  if (o.lm_corpus.empty()) throw ConfigError("--scorer ngram needs --lm-corpus");
  auto model = std::make_shared<const NgramModel>(
      NgramModel::train(read_lm_corpus(o.lm_corpus), o.ngram_order));
  NgramScorer::Options opts;
  opts.alpha = o.ngram_alpha;
  opts.normalization = o.ngram_norm == "vocabulary" ? NgramScorer::Normalization::vocabulary
                                                    : NgramScorer::Normalization::candidates;
  return shared_provider(std::make_shared<NgramScorer>(model, opts));
}

void write_json(const fs::path& path, const ojson& j) { write_text_file(path, j.dump(2) + "\n"); }

// build ---------------------------------------------------------------

struct BuildOptions {
  std::string dictionary;
  std::string keyboard;
  std::string homophones;
  std::string out;
  std::string format = "both";
  std::size_t jobs = default_jobs();
};

int cmd_build(const BuildOptions& o) {
  const Lexicon lexicon = Lexicon::load(o.dictionary);
  const LetterMap adj = LetterMap::load(o.keyboard);
  const LetterMap hmap = LetterMap::load(o.homophones);
  const ConfusionIndex index = ConfusionIndex::build(lexicon, adj, hmap, o.jobs);

  const fs::path dir = o.out;
  fs::create_directories(dir);
  lexicon.save(dir / "lexicon.tsv");
  adj.save(dir / "adjacency.tsv");
  hmap.save(dir / "homophones.tsv");
  ojson files = ojson::array({"lexicon.tsv", "adjacency.tsv", "homophones.tsv"});
  if (o.format != "binary") {
    index.save_tsv(dir / "confusion.tsv");
    files.push_back("confusion.tsv");
  }
  if (o.format != "tsv") {
    index.save_binary(dir / "confusion.bin");
    files.push_back("confusion.bin");
  }

  std::size_t pairs = 0;
  std::size_t nonempty = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    pairs += index.values(i).size();
    if (!index.values(i).empty()) ++nonempty;
  }
  ojson manifest;
  manifest["version"] = kArtifactVersion;
  manifest["words"] = lexicon.size();
  manifest["alphabet"] = lexicon.alphabet().size();
  manifest["confusion_keys"] = index.size();
  manifest["confusion_nonempty"] = nonempty;
  manifest["confusion_pairs"] = pairs;
  manifest["files"] = files;
  write_json(dir / "manifest.json", manifest);

  std::cout << "words " << lexicon.size() << "\n"
            << "alphabet " << lexicon.alphabet().size() << "\n"
            << "confusion sets " << nonempty << " non-empty, " << pairs << " pairs\n";
  return kExitOk;
}

// corrupt -------------------------------------------------------------

struct CorruptOptions {
  std::string index;
  std::string corpus;
  std::string out;
  std::string stats;
  std::string rejects;
  std::uint64_t seed = 0;
  std::size_t repetitions = 1;
  double p_unchanged = 0.5;
  double p_homophone_real = 0.8;
  double p_real_branch = 0.5;
  bool retain = false;
  std::size_t jobs = default_jobs();
};

int cmd_corrupt(const CorruptOptions& o) {
  const Artifacts a = load_artifacts(o.index);
  CorruptionConfig config;
  config.seed = o.seed;
  config.repetitions = o.repetitions;
  config.p_unchanged = o.p_unchanged;
  config.p_homophone_real = o.p_homophone_real;
  config.p_real_branch = o.p_real_branch;
  config.validate();

  std::ofstream rejects;
  if (!o.rejects.empty()) {
    rejects.open(o.rejects, std::ios::binary | std::ios::trunc);
    if (!rejects) throw IoError("cannot write " + o.rejects);
  }
  Dataset ds = build_dataset(fs::path(o.corpus), config, a.lexicon, a.adj, a.hmap, o.jobs,
                             o.rejects.empty() ? nullptr : &rejects);
  std::size_t dropped = 0;
  if (o.retain) {
    const std::size_t before = ds.records.size();
    ds.records = eval_retention_filter(std::move(ds.records), a.confusion);
    dropped = before - ds.records.size();
  }
  write_records(fs::path(o.out), ds.records);
  write_stats(o.stats.empty() ? fs::path(o.out + ".stats.tsv") : fs::path(o.stats), ds.stats);

  std::cout << "lines " << ds.stats.pruning.lines << ", accepted " << ds.stats.pruning.accepted
            << "\nrecords " << ds.records.size() << ", degraded " << ds.stats.degraded;
  if (o.retain) std::cout << ", dropped by retention " << dropped;
  std::cout << "\n";
  return kExitOk;
}

// correct -------------------------------------------------------------

struct CorrectOptions {
  std::string index;
  std::string records;
  std::string out;
  ScorerOptions scorer;
  double threshold = 1e-5;
  std::string strategy = "proposed";
  std::string mode = "oracle";
  std::size_t topn = 500;
  bool fail_on_scorer_error = false;
  std::size_t jobs = default_jobs();
};

int cmd_correct(const CorrectOptions& o) {
  const Artifacts a = load_artifacts(o.index);
  CorrectorConfig config;
  config.threshold_k = o.threshold;
  config.strategy = parse_strategy(o.strategy);
  config.detection_mode = parse_detection_mode(o.mode);
  config.baseline_v1_topn = o.topn;
  config.fail_on_scorer_error = o.fail_on_scorer_error;
  const Corrector corrector(a.lexicon, a.confusion, config);
  const ScorerProvider provider = make_provider(o.scorer, a, config.detection_mode);
  const auto records = read_records(o.records);

  CorrectionRun run = correct_dataset(records, corrector, provider, o.jobs);
  write_predictions(fs::path(o.out), run.rows);

  ojson meta;
  meta["command"] = "correct";
  meta["index"] = o.index;
  meta["records"] = o.records;
  meta["strategy"] = o.strategy;
  meta["mode"] = o.mode;
  meta["threshold"] = o.threshold;
  meta["max_distance"] = config.max_distance;
  meta["baseline_v1_topn"] = o.topn;
  meta["fail_on_scorer_error"] = o.fail_on_scorer_error;
  const ojson scorer_meta = scorer_json(o.scorer);
  for (auto& [k, v] : scorer_meta.items()) meta[k] = v;
  meta["record_count"] = records.size();
  meta["prediction_rows"] = run.rows.size();
  meta["skipped"] = run.skipped;
  meta["scorer_failures"] = run.scorer_failures;
  meta["mean_candidates"] = run.mean_candidates;
  write_json(o.out + ".meta.json", meta);

  ojson timing;
  timing["elapsed_seconds"] = run.elapsed_seconds;
  timing["records"] = records.size();
  write_json(o.out + ".timing.json", timing);

  for (auto id : run.skipped) {
    std::cerr << "warning: skipped sentence " << id << ": labeled index out of range\n";
  }
  if (run.scorer_failures > 0) {
    std::cerr << "warning: " << run.scorer_failures
              << " words kept because the scorer failed\n";
  }
  std::cout << "rows " << run.rows.size() << ", mean candidates " << run.mean_candidates
            << "\n";
  return kExitOk;
}

// evaluate ------------------------------------------------------------

struct EvaluateOptions {
  std::string index;
  std::string records;
  std::string predictions;
  std::string out;
  std::string diagnostics;
  std::string zwnj = "preserve";
  bool ablation = false;
};

void attach_run_info(EvalReport& report, const EvaluateOptions& o) {
  report.metadata["records_path"] = o.records;
  report.metadata["predictions_path"] = o.predictions;
  const fs::path meta = o.predictions + ".meta.json";
  if (fs::exists(meta)) {
    const ojson j = ojson::parse(read_text_file(meta), nullptr, false);
    if (j.is_object()) {
      for (auto& [k, v] : j.items()) {
        report.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
  }
  const fs::path timing = o.predictions + ".timing.json";
  if (fs::exists(timing)) {
    const ojson j = ojson::parse(read_text_file(timing), nullptr, false);
    if (j.is_object() && j.contains("elapsed_seconds") && j["elapsed_seconds"].is_number()) {
      const double s = j["elapsed_seconds"].get<double>();
      report.elapsed_minutes = s / 60.0;
      if (report.records > 0) report.ms_per_sentence = s * 1000.0 / report.records;
    }
  }
}

int cmd_evaluate(const EvaluateOptions& o) {
  const Artifacts a = load_artifacts(o.index);
  const auto gold = read_records(o.records);
  const auto rows = read_predictions(o.predictions);
  const JudgeContext ctx{a.confusion, a.adj, a.hmap};
  const ZwnjMode mode = o.zwnj == "strip" ? ZwnjMode::strip : ZwnjMode::preserve;

  if (o.ablation) {
    auto [raw, stripped] = zwnj_ablation(gold, rows, ctx);
    attach_run_info(raw, o);
    attach_run_info(stripped, o);
    write_text_file(o.out, ablation_to_json(raw, stripped));
    auto tp = [](const EvalReport& r) {
      std::uint64_t n = 0;
      for (const auto& c : r.per_class) n += c.tp;
      return n;
    };
    std::cout << "TP raw " << tp(raw) << ", stripped " << tp(stripped) << "\n";
  } else {
    EvalReport report = evaluate(gold, rows, ctx, mode);
    attach_run_info(report, o);
    write_text_file(o.out, report_to_json(report));
    auto show = [](const std::optional<double>& v) {
      std::ostringstream s;
      if (v) s << *v; else s << "n/a";
      return s.str();
    };
    std::cout << "judged " << report.judged << ", micro P " << show(report.overall.micro.precision)
              << " R " << show(report.overall.micro.recall) << " F1 "
              << show(report.overall.micro.f1) << "\n";
  }
  if (!o.diagnostics.empty()) {
    write_text_file(o.diagnostics, diagnostics_to_csv(diagnostics(gold, rows, mode)));
  }
  return kExitOk;
}

// sweep ---------------------------------------------------------------

struct SweepOptions {
  std::string index;
  std::string records;
  std::string out;
  ScorerOptions scorer;
  std::vector<double> thresholds = kDefaultThresholds;
  std::size_t jobs = default_jobs();
};

int cmd_sweep(const SweepOptions& o) {
  for (double k : o.thresholds) {
    if (!(k > 0.0 && k <= 1.0)) throw ConfigError("thresholds must lie in (0, 1]");
  }
  const Artifacts a = load_artifacts(o.index);
  const ScorerProvider provider = make_provider(o.scorer, a, DetectionMode::oracle);
  const auto records = read_records(o.records);
  const auto points = threshold_sweep(records, a.confusion, provider, o.thresholds, 2, o.jobs);
  write_text_file(o.out, sweep_to_csv(points));
  std::cout << points.size() << " thresholds\n";
  return kExitOk;
}

// plan ----------------------------------------------------------------

struct PlanOptions {
  std::string index;
  std::string records;
  std::string out;
  std::uint64_t seed = 0;
  double p_select = 0.15;
  double p_mask = 0.8;
  double p_random = 0.1;
  std::size_t jobs = default_jobs();
};

int cmd_plan(const PlanOptions& o) {
  const Lexicon lexicon = Lexicon::load(fs::path(o.index) / "lexicon.tsv");
  const auto records = read_records(o.records);
  MaskingConfig config;
  config.p_select = o.p_select;
  config.p_mask = o.p_mask;
  config.p_random = o.p_random;
  const auto plans = build_masking_plans(records, lexicon, o.seed, config, o.jobs);
  emit_training_file(fs::path(o.out), records, plans);
  std::cout << "lines " << records.size() << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Persian misspelling correction and evaluation harness"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Load the dictionary and maps, build the confusion index");
  flag_opt(b, "--dictionary", build.dictionary, "Dictionary file: word[TAB frequency]")
      ->required();
  flag_opt(b, "--keyboard", build.keyboard, "Keyboard adjacency file")->required();
  flag_opt(b, "--homophones", build.homophones, "Homophone file")->required();
  flag_opt(b, "--out", build.out, "Output index directory")->required();
  flag_opt(b, "--format", build.format, "Confusion index format")
      ->check(CLI::IsMember({"tsv", "binary", "both"}));
  flag_opt(b, "--jobs", build.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CorruptOptions corrupt;
  auto* c = app.add_subcommand("corrupt", "Prune a corpus and inject labeled errors");
  flag_opt(c, "--index", corrupt.index, "Index directory from build")->required();
  flag_opt(c, "--corpus", corrupt.corpus, "UTF-8 corpus, one sentence per line")->required();
  flag_opt(c, "--out", corrupt.out, "Records TSV")->required();
  flag_opt(c, "--stats", corrupt.stats, "Stats TSV (default: <out>.stats.tsv)");
  flag_opt(c, "--rejects", corrupt.rejects, "Rejected lines log");
  flag_opt(c, "--seed", corrupt.seed, "Random seed");
  flag_opt(c, "--repetitions", corrupt.repetitions, "Passes over the corpus")
      ->check(CLI::PositiveNumber);
  flag_opt(c, "--p-unchanged", corrupt.p_unchanged, "Probability of leaving a sentence alone");
  flag_opt(c, "--p-homophone-real", corrupt.p_homophone_real,
           "Probability of a real-word homophone error when one is possible");
  flag_opt(c, "--p-real-branch", corrupt.p_real_branch, "Probability of the real-word branch");
  c->add_flag("--retain-filter", corrupt.retain,
              "Drop unchanged sentences without a confusable word")
      ->envname("SPELLFIX_RETAIN_FILTER");
  flag_opt(c, "--jobs", corrupt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CorrectOptions correct;
  auto* r = app.add_subcommand("correct", "Correct a records file and write predictions");
  flag_opt(r, "--index", correct.index, "Index directory from build")->required();
  flag_opt(r, "--records", correct.records, "Records TSV")->required();
  flag_opt(r, "--out", correct.out, "Predictions TSV")->required();
  add_scorer_options(r, correct.scorer);
  flag_opt(r, "--threshold", correct.threshold, "Real-word threshold K in (0, 1]");
  flag_opt(r, "--strategy", correct.strategy, "Correction strategy")
      ->check(CLI::IsMember({"proposed", "baseline_v1", "baseline_v2"}));
  flag_opt(r, "--mode", correct.mode, "Detection mode")
      ->check(CLI::IsMember({"oracle", "scan"}));
  flag_opt(r, "--topn", correct.topn, "Suggestions taken by baseline_v1")
      ->check(CLI::PositiveNumber);
  r->add_flag("--fail-on-scorer-error", correct.fail_on_scorer_error,
              "Abort on scorer failures instead of keeping the word")
      ->envname("SPELLFIX_FAIL_ON_SCORER_ERROR");
  flag_opt(r, "--jobs", correct.jobs, "Worker threads")->check(CLI::PositiveNumber);

  EvaluateOptions evaluate;
  auto* e = app.add_subcommand("evaluate", "Judge predictions against gold records");
  flag_opt(e, "--index", evaluate.index, "Index directory from build")->required();
  flag_opt(e, "--records", evaluate.records, "Gold records TSV")->required();
  flag_opt(e, "--predictions", evaluate.predictions, "Predictions TSV")->required();
  flag_opt(e, "--out", evaluate.out, "Report JSON")->required();
  flag_opt(e, "--diagnostics", evaluate.diagnostics, "Missed-error histogram CSV");
  flag_opt(e, "--zwnj", evaluate.zwnj, "ZWNJ handling when comparing words")
      ->check(CLI::IsMember({"preserve", "strip"}));
  e->add_flag("--zwnj-ablation", evaluate.ablation, "Write raw and stripped reports")
      ->envname("SPELLFIX_ZWNJ_ABLATION");

  SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "Real-word threshold sweep, one PR row per threshold");
  flag_opt(s, "--index", sweep.index, "Index directory from build")->required();
  flag_opt(s, "--records", sweep.records, "Records TSV")->required();
  flag_opt(s, "--out", sweep.out, "PR curve CSV")->required();
  add_scorer_options(s, sweep.scorer);
  flag_opt(s, "--thresholds", sweep.thresholds, "Threshold grid")->delimiter(',');
  flag_opt(s, "--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);

  PlanOptions plan;
  auto* p = app.add_subcommand("plan", "Write the biased masking training file");
  flag_opt(p, "--index", plan.index, "Index directory from build")->required();
  flag_opt(p, "--records", plan.records, "Records TSV")->required();
  flag_opt(p, "--out", plan.out, "Training file")->required();
  flag_opt(p, "--seed", plan.seed, "Random seed");
  flag_opt(p, "--p-select", plan.p_select, "Selection probability per word");
  flag_opt(p, "--p-mask", plan.p_mask, "Mask share of selected words");
  flag_opt(p, "--p-random", plan.p_random, "Random replacement share of selected words");
  flag_opt(p, "--jobs", plan.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (b->parsed()) return cmd_build(build);
    if (c->parsed()) return cmd_corrupt(corrupt);
    if (r->parsed()) return cmd_correct(correct);
    if (e->parsed()) return cmd_evaluate(evaluate);
    if (s->parsed()) return cmd_sweep(sweep);
    if (p->parsed()) return cmd_plan(plan);
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const ScorerError& err) {
    std::cerr << "scorer error: " << err.what() << "\n";
    return kExitTransport;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  argv.reserve(storage.size() + 1);
  for (auto& a : storage) argv.push_back(a.data());
  argv.push_back(nullptr);
  return run(static_cast<int>(storage.size()), argv.data());
}

}  // namespace spellfix::cli
