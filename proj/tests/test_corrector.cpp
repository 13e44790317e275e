#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spellfix/corrector.hpp"
#include "spellfix/error.hpp"
#include "spellfix/errorgen.hpp"
#include "spellfix/evaluation.hpp"
#include "spellfix/ngram_scorer.hpp"

using namespace spellfix;
using namespace spellfix::testing;

namespace {

using Words = std::vector<std::u32string>;

// Fixed score per word, `rest` for anything else. Counts calls.
class TableScorer : public Scorer {
 public:
  explicit TableScorer(std::map<std::u32string, double> t, double rest = 0.0)
      : table_(std::move(t)), rest_(rest) {}
  std::vector<ScoredCandidate> score(const MaskedQuery& q) const override {
    ++calls;
    last = q;
    std::vector<ScoredCandidate> out;
    for (const auto& c : q.candidates) {
      auto it = table_.find(c);
      out.push_back({c, it == table_.end() ? rest_ : it->second});
    }
    return out;
  }
  std::string name() const override { return "table"; }
  mutable int calls = 0;
  mutable MaskedQuery last;

 private:
  std::map<std::u32string, double> table_;
  double rest_;
};

class FailingScorer : public Scorer, public OpenVocabularyScorer {
 public:
  std::vector<ScoredCandidate> score(const MaskedQuery&) const override {
    throw TransportError(TransportErrorKind::connection_refused, "down");
  }
  std::vector<ScoredCandidate> top_n(const Words&, std::size_t, std::size_t) const override {
    throw TransportError(TransportErrorKind::timeout, "slow");
  }
  std::string name() const override { return "failing"; }
};

class BrokenScorer : public Scorer {
 public:
  std::vector<ScoredCandidate> score(const MaskedQuery& q) const override {
    return {{q.candidates[0], 2.0}};
  }
  std::string name() const override { return "broken"; }
};

class ListScorer : public OpenVocabularyScorer {
 public:
  explicit ListScorer(std::vector<ScoredCandidate> l) : list_(std::move(l)) {}
  std::vector<ScoredCandidate> top_n(const Words&, std::size_t, std::size_t n) const override {
    return {list_.begin(), list_.begin() + static_cast<std::ptrdiff_t>(std::min(n, list_.size()))};
  }

 private:
  std::vector<ScoredCandidate> list_;
};

const Words kSentence{U"the", U"cta", U"sat"};

}  // namespace

TEST(MaskWord, Examples) {
  const auto q = mask_word({U"a", U"b", U"c"}, 1);
  EXPECT_EQ(q.tokens, (Words{U"a", std::u32string(kMaskToken), U"c"}));
  EXPECT_EQ(q.mask_index, 1u);
  EXPECT_TRUE(q.candidates.empty());
  EXPECT_EQ(mask_word({U"a"}, 0).tokens, (Words{std::u32string(kMaskToken)}));
  EXPECT_THROW(mask_word({U"a", U"b", U"c"}, 5), DataError);
}

TEST(Config, Validation) {
  CorrectorConfig c;
  EXPECT_NO_THROW(c.validate());
  c.threshold_k = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c.threshold_k = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.baseline_v1_topn = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_EQ(parse_strategy("baseline_v2"), Strategy::baseline_v2);
  EXPECT_THROW(parse_strategy("v3"), ConfigError);
  EXPECT_EQ(parse_detection_mode(to_string(DetectionMode::scan)), DetectionMode::scan);
  const Lexicon empty;
  const ConfusionIndex none;
  EXPECT_THROW(Corrector(empty, none, {}), ConfigError);
}

TEST(BestCandidate, TieBreaks) {
  // Equal scores: smaller distance to the observed word, then code points.
  EXPECT_EQ(best_candidate({{U"xyz", 0.5}, {U"abd", 0.5}}, U"abc"), 1u);
  EXPECT_EQ(best_candidate({{U"abe", 0.5}, {U"abd", 0.5}}, U"abc"), 1u);
  EXPECT_EQ(best_candidate({{U"abe", 0.5}, {U"zzz", 0.6}}, U"abc"), 1u);
}

TEST(Nonreal, SwapCandidateWins) {
  const Lexicon lex = Lexicon::from_words({U"cat", U"cot", U"act", U"dog"});
  TableScorer s({{U"cat", 0.9}});
  const auto sg = correct_nonreal(kSentence, 1, lex, s);
  EXPECT_EQ(sg.action, Action::replaced);
  EXPECT_EQ(sg.replacement, U"cat");
  EXPECT_EQ(sg.reason, Reason::ok);
  EXPECT_EQ(sg.score, 0.9);
  EXPECT_EQ(sg.candidate_count, 1u);
  EXPECT_EQ(s.last.candidates, (Words{U"cat"}));
  EXPECT_EQ(s.last.tokens[1], std::u32string(kMaskToken));
}

TEST(Nonreal, NoCandidates) {
  const Lexicon lex = Lexicon::from_words({U"dog"});
  TableScorer s({});
  const auto sg = correct_nonreal(kSentence, 1, lex, s);
  EXPECT_EQ(sg.action, Action::kept);
  EXPECT_EQ(sg.reason, Reason::no_candidates);
  EXPECT_EQ(sg.replacement, U"cta");
  EXPECT_FALSE(sg.score);
  EXPECT_EQ(s.calls, 0);
}

TEST(Nonreal, NoThresholdApplied) {
  const Lexicon lex = Lexicon::from_words({U"cat", U"cot"});
  TableScorer s({}, 1e-12);
  const auto sg = correct_nonreal({U"cbt"}, 0, lex, s);
  EXPECT_EQ(sg.action, Action::replaced);
  EXPECT_EQ(sg.replacement, U"cat");
}

TEST(Nonreal, PersianSabatExample) {
  const Lexicon lex = Lexicon::from_words(words_of("ثبات است این"));
  TableScorer s({{u("ثبات"), 0.7}});
  const auto sg = correct_nonreal(words_of("این صبات است"), 1, lex, s);
  EXPECT_EQ(sg.replacement, u("ثبات"));
  EXPECT_TRUE(sg.replaced());
}

TEST(Nonreal, ScorerFailureKeepsWord) {
  const Lexicon lex = Lexicon::from_words({U"cat"});
  const auto sg = correct_nonreal(kSentence, 1, lex, FailingScorer());
  EXPECT_EQ(sg.action, Action::kept);
  EXPECT_EQ(sg.reason, Reason::scorer_failure);
  const auto bad = correct_nonreal(kSentence, 1, lex, BrokenScorer());
  EXPECT_EQ(bad.reason, Reason::scorer_failure);
}

class Realword : public ::testing::Test {
 protected:
  Lexicon lex = Lexicon::from_words(words_of("صوت سوت و تصویر"));
  ConfusionIndex idx = ConfusionIndex::build(lex, LetterMap(), persian_homophones());
  Words sentence = words_of("سوت و تصویر");
};

TEST_F(Realword, ThresholdComparison) {
  TableScorer s({{u("صوت"), 1e-4}});
  CorrectorConfig c;
  c.threshold_k = 1e-5;
  auto sg = correct_realword(sentence, 0, idx, s, c);
  EXPECT_TRUE(sg.replaced());
  EXPECT_EQ(sg.replacement, u("صوت"));
  c.threshold_k = 1e-3;
  sg = correct_realword(sentence, 0, idx, s, c);
  EXPECT_EQ(sg.action, Action::kept);
  EXPECT_EQ(sg.reason, Reason::below_threshold);
  EXPECT_EQ(sg.score, 1e-4);
  c.threshold_k = 1e-4;
  EXPECT_TRUE(correct_realword(sentence, 0, idx, s, c).replaced());
}

TEST_F(Realword, SoundAndVisionExample) {
  TableScorer s({{u("صوت"), 0.6}});
  const auto sg = correct_realword(sentence, 0, idx, s, CorrectorConfig{});
  EXPECT_EQ(sg.replacement, u("صوت"));
  EXPECT_EQ(sg.reason, Reason::ok);
}

TEST_F(Realword, EmptyConfusionSet) {
  TableScorer s({});
  const auto sg = correct_realword(sentence, 1, idx, s, CorrectorConfig{});
  EXPECT_EQ(sg.reason, Reason::no_candidates);
  EXPECT_EQ(s.calls, 0);
}

TEST_F(Realword, DistanceGuard) {
  RealwordScoring r;
  r.original = U"abc";
  r.candidate_count = 1;
  r.best = ScoredCandidate{U"xyz", 0.9};
  r.best_distance = 3;
  EXPECT_EQ(decide_realword(r, 1e-5, 2).reason, Reason::distance_guard);
  r.best_distance = 2;
  EXPECT_TRUE(decide_realword(r, 1e-5, 2).replaced());
}

TEST_F(Realword, FailureModes) {
  auto sg = correct_realword(sentence, 0, idx, FailingScorer(), CorrectorConfig{});
  EXPECT_EQ(sg.reason, Reason::scorer_failure);
  EXPECT_EQ(sg.action, Action::kept);
  CorrectorConfig strict;
  strict.fail_on_scorer_error = true;
  EXPECT_THROW(correct_realword(sentence, 0, idx, FailingScorer(), strict), TransportError);
}

TEST(Routing, OracleModeUsesTheRightPipeline) {
  const Lexicon lex = Lexicon::from_words({U"cat", U"cot", U"act", U"the", U"sat"});
  const ConfusionIndex idx = ConfusionIndex::build(lex, LetterMap::from_entries({{U'o', {U'a'}}}),
                                                   LetterMap());
  Corrector corr(lex, idx, {});
  TableScorer s({{U"cat", 0.9}, {U"cot", 0.05}, {U"act", 0.05}});

  ErrorRecord nonreal;
  nonreal.corrupted_tokens = kSentence;
  nonreal.error_index = 1;
  nonreal.original_word = U"cat";
  nonreal.corrupted_word = U"cta";
  nonreal.category = Category::nonreal;
  nonreal.etype = ErrorType::substitution;
  auto out = corr.correct_record(nonreal, s);
  ASSERT_EQ(out.suggestions.size(), 1u);
  EXPECT_EQ(s.last.candidates, (Words{U"cat"}));
  EXPECT_EQ(out.corrected, (Words{U"the", U"cat", U"sat"}));

  ErrorRecord real = nonreal;
  real.corrupted_tokens = {U"the", U"cot", U"sat"};
  real.corrupted_word = U"cot";
  real.category = Category::real;
  real.etype = ErrorType::keyboard;
  out = corr.correct_record(real, s);
  ASSERT_EQ(out.suggestions.size(), 1u);
  EXPECT_EQ(s.last.candidates, idx.confusion_set(U"cot"));
  EXPECT_EQ(out.suggestions[0].replacement, U"cat");

  ErrorRecord bad = real;
  bad.error_index = 9;
  EXPECT_THROW(corr.correct_record(bad, s), DataError);
}

TEST(Routing, UnchangedRecordProbesFirstConfusableToken) {
  const Lexicon lex = Lexicon::from_words({U"cat", U"cot", U"the", U"sat"});
  const ConfusionIndex idx = ConfusionIndex::build(lex, LetterMap::from_entries({{U'o', {U'a'}}}),
                                                   LetterMap());
  ErrorRecord r;
  r.corrupted_tokens = {U"the", U"sat", U"cat"};
  EXPECT_EQ(judged_position(r, idx), std::optional<std::size_t>(2));
  r.corrupted_tokens = {U"the", U"sat"};
  EXPECT_FALSE(judged_position(r, idx));
  Corrector corr(lex, idx, {});
  TableScorer s({});
  EXPECT_TRUE(corr.correct_record(r, s).suggestions.empty());
}

TEST(Routing, BaselineV1NeedsOpenVocabulary) {
  const Lexicon lex = Lexicon::from_words({U"cat"});
  const ConfusionIndex idx;
  CorrectorConfig c;
  c.strategy = Strategy::baseline_v1;
  Corrector corr(lex, idx, c);
  TableScorer s({});
  EXPECT_THROW(corr.correct_at(kSentence, 1, s), ConfigError);
  ListScorer open({{U"cat", 0.4}});
  EXPECT_EQ(corr.correct_at(kSentence, 1, s, &open).replacement, U"cat");
}

TEST(BaselineV1, Examples) {
  EXPECT_EQ(baseline_v1(kSentence, 1, ListScorer({{U"dog", 0.5}, {U"cat", 0.2}}), 500)
                .replacement,
            U"cat");
  const auto none = baseline_v1(kSentence, 1, ListScorer({{U"elephant", 0.9}}), 500);
  EXPECT_EQ(none.reason, Reason::no_candidates);
  EXPECT_EQ(none.action, Action::kept);
  // Same distance: model rank decides.
  const ListScorer ordered({{U"xta", 0.1}, {U"ct", 0.05}});
  EXPECT_EQ(baseline_v1(kSentence, 1, ordered, 500).replacement, U"xta");
  // Distance 2 ranked first, distance 1 second: distance wins.
  const ListScorer far_first({{U"atc", 0.6}, {U"ctx", 0.3}});
  ASSERT_EQ(dp_levenshtein(U"cta", U"atc"), 2u);
  ASSERT_EQ(dp_levenshtein(U"cta", U"ctx"), 1u);
  EXPECT_EQ(baseline_v1(kSentence, 1, far_first, 500).replacement, U"ctx");
  const ListScorer far_second({{U"ctx", 0.6}, {U"atc", 0.3}});
  EXPECT_EQ(baseline_v1(kSentence, 1, far_second, 500).replacement, U"ctx");
  // Only the top n are considered.
  EXPECT_EQ(baseline_v1(kSentence, 1, ListScorer({{U"dog", 0.5}, {U"cat", 0.2}}), 1).reason,
            Reason::no_candidates);
  EXPECT_EQ(baseline_v1(kSentence, 1, FailingScorer(), 500).reason, Reason::scorer_failure);
}

TEST(BaselineV2, DistanceBall) {
  const Lexicon lex = Lexicon::from_words({U"cat", U"cot", U"act", U"dog"});
  TableScorer s({{U"cot", 0.5}, {U"cat", 0.3}});
  const auto sg = baseline_v2(kSentence, 1, lex, s);
  EXPECT_EQ(std::set<std::u32string>(s.last.candidates.begin(), s.last.candidates.end()),
            (std::set<std::u32string>{U"cat", U"cot", U"act"}));
  EXPECT_EQ(sg.replacement, U"cot");
  EXPECT_EQ(sg.candidate_count, 3u);
  const auto none = baseline_v2({U"zzzzzz"}, 0, lex, s);
  EXPECT_EQ(none.reason, Reason::no_candidates);
}

TEST(Scan, AllCorrectSentenceHighThresholdKeepsEverything) {
  const World w = make_world(31, 400, 100, 12, 600);
  auto model = std::make_shared<const NgramModel>(NgramModel::train(w.lm_sentences));
  NgramScorer scorer(model, {1.0, NgramScorer::Normalization::vocabulary});
  CorrectorConfig c;
  c.detection_mode = DetectionMode::scan;
  c.threshold_k = 0.999;
  Corrector corr(w.lexicon, w.confusion, c);
  std::size_t touched = 0;
  for (const auto& s : w.sentences) {
    const auto out = corr.correct_tokens(s.tokens, scorer);
    ASSERT_EQ(out.suggestions.size(), s.tokens.size());
    for (const auto& sg : out.suggestions) {
      EXPECT_FALSE(sg.replaced());
      if (sg.candidate_count) ++touched;
    }
    EXPECT_EQ(out.corrected, s.tokens);
  }
  EXPECT_GT(touched, 0u);
}

TEST(Scan, RoutesEveryToken) {
  const Lexicon lex = Lexicon::from_words({U"cat", U"cot", U"the", U"sat"});
  const ConfusionIndex idx = ConfusionIndex::build(lex, LetterMap::from_entries({{U'o', {U'a'}}}),
                                                   LetterMap());
  CorrectorConfig c;
  c.detection_mode = DetectionMode::scan;
  Corrector corr(lex, idx, c);
  TableScorer s({{U"cat", 0.9}});
  ErrorRecord r;
  r.corrupted_tokens = {U"the", U"cta", U"cot"};
  const auto out = corr.correct_record(r, s);
  ASSERT_EQ(out.suggestions.size(), 3u);
  EXPECT_EQ(out.suggestions[0].reason, Reason::no_candidates);
  EXPECT_EQ(out.suggestions[1].replacement, U"cat");
  EXPECT_EQ(out.suggestions[2].replacement, U"cat");
  EXPECT_EQ(out.corrected, (Words{U"the", U"cat", U"cat"}));
}

TEST(Properties, OracleScorerRecoversEveryInjectedError) {
  const World w = make_world(32, 600, 1500);
  CorruptionConfig cfg;
  cfg.seed = 8;
  cfg.p_unchanged = 0.0;
  const Dataset ds = build_dataset(w.sentences, cfg, w.lexicon, w.adj, w.hmap, 4);
  Corrector corr(w.lexicon, w.confusion, {});
  std::size_t errors = 0;
  for (const auto& r : ds.records) {
    if (!r.has_error()) continue;
    ++errors;
    OracleScorer oracle(r.original_word);
    const auto out = corr.correct_record(r, oracle);
    ASSERT_EQ(out.suggestions.size(), 1u);
    EXPECT_EQ(out.suggestions[0].replacement, r.original_word) << s8(r.corrupted_word);
    EXPECT_EQ(out.corrected, r.original_tokens());
  }
  EXPECT_GT(errors, 1000u);
}

TEST(Properties, ReplacementsStayWithinDistanceTwo) {
  const World w = make_world(33, 500, 300, 12, 600);
  auto model = std::make_shared<const NgramModel>(NgramModel::train(w.lm_sentences));
  NgramScorer scorer(model);
  CorruptionConfig cfg;
  cfg.seed = 4;
  const Dataset ds = build_dataset(w.sentences, cfg, w.lexicon, w.adj, w.hmap, 2);
  Corrector corr(w.lexicon, w.confusion, {});
  for (const auto& r : ds.records) {
    for (const auto& sg : corr.correct_record(r, scorer).suggestions) {
      EXPECT_EQ(sg.replaced(), sg.replacement != sg.original);
      if (sg.replaced()) {
        EXPECT_LE(dp_levenshtein(sg.replacement, sg.original), 2u);
        EXPECT_TRUE(sg.score.has_value());
        EXPECT_EQ(sg.reason, Reason::ok);
      }
    }
  }
}

TEST(Properties, ThresholdMonotonicity) {
  const World w = make_world(34, 400, 400, 12, 800);
  auto model = std::make_shared<const NgramModel>(NgramModel::train(w.lm_sentences));
  NgramScorer scorer(model, {1.0, NgramScorer::Normalization::vocabulary});
  CorruptionConfig cfg;
  cfg.seed = 6;
  const Dataset ds = build_dataset(w.sentences, cfg, w.lexicon, w.adj, w.hmap, 2);
  std::vector<std::set<std::pair<std::int64_t, std::size_t>>> replaced;
  for (double k : kDefaultThresholds) {
    CorrectorConfig c;
    c.threshold_k = k;
    Corrector corr(w.lexicon, w.confusion, c);
    std::set<std::pair<std::int64_t, std::size_t>> set;
    for (const auto& r : ds.records) {
      if (r.category == Category::nonreal) continue;
      for (const auto& sg : corr.correct_record(r, scorer).suggestions) {
        if (sg.replaced()) set.insert({r.sentence_id, sg.token_index});
      }
    }
    replaced.push_back(std::move(set));
  }
  // Thresholds are descending, so each set contains the previous one.
  for (std::size_t i = 1; i < replaced.size(); ++i) {
    EXPECT_TRUE(std::includes(replaced[i].begin(), replaced[i].end(), replaced[i - 1].begin(),
                              replaced[i - 1].end()));
  }
  EXPECT_LT(replaced.front().size(), replaced.back().size());
}
