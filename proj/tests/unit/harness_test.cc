#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "quantnli/harness.h"

namespace quantnli {
namespace {

namespace fs = std::filesystem;

const std::string kCorpora = QUANTNLI_FIXTURE_DIR "/corpora";

DatasetProfile Profile(const std::string &name) {
  return *Config{}.Profile(name);
}

LoadResult Load(const std::string &file, const std::string &profile) {
  const std::string path = kCorpora + "/" + file;
  return LoadDataset(path, FormatFromPath(path), Profile(profile));
}

fs::path TempFile(const std::string &name, const std::string &content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

TEST(Profiles, ArityPerTestSet) {
  Config cfg;
  EXPECT_EQ(cfg.Profile("rte-quant")->arity, 2);
  EXPECT_EQ(cfg.Profile("NewsNLI")->arity, 2);
  EXPECT_EQ(cfg.Profile("redditnli")->arity, 3);
  EXPECT_EQ(cfg.Profile("StressTest")->arity, 3);
  EXPECT_EQ(cfg.Profile("awpnli")->arity, 2);
  EXPECT_FALSE(cfg.Profile("snli"));
}

TEST(Config, RejectsUnknownKeys) {
  EXPECT_THROW(ConfigFromJson(nlohmann::json{{"thetta", 0.5}}), std::runtime_error);
  Config c = ConfigFromJson(nlohmann::json{{"theta", 0.5}, {"seed", 99}, {"max_depth", 2}});
  EXPECT_DOUBLE_EQ(c.engine.theta, 0.5);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.engine.composer.max_depth, 2);
  EXPECT_EQ(c.engine.composer.max_solutions, 50);
}

TEST(Config, LoadsShippedDefault) {
  Config c = LoadConfig(QUANTNLI_FIXTURE_DIR "/../../config/default.json");
  EXPECT_DOUBLE_EQ(c.engine.theta, 0.6);
  EXPECT_EQ(c.engine.composer.max_depth, 3);
}

TEST(Load, JsonlWithArity) {
  auto r = Load("awpnli_mini.jsonl", "awpnli");
  EXPECT_EQ(r.pairs.size(), 12u);
  EXPECT_EQ(r.skipped, 0u);
  EXPECT_EQ(r.pairs[0].arity, 2);
  EXPECT_EQ(r.pairs[0].id, "awp-1");
  EXPECT_EQ(r.pairs[1].gold, Label::kNotEntails);
}

TEST(Load, TsvSkipsMalformedRows) {
  auto r = Load("rtequant_mini.tsv", "rte-quant");
  EXPECT_EQ(r.pairs.size(), 2u);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Load, UnknownLabelIsSkipped) {
  auto p = TempFile("quantnli_badlabel.jsonl",
                    R"({"sentence1":"a 1","sentence2":"b 1","gold_label":"-"})"
                    "\n{not json}\n");
  auto r = LoadDataset(p.string(), DatasetFormat::kJsonl, Profile("stress-test"));
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.skipped, 2u);
  fs::remove(p);
}

TEST(Load, EmptyFile) {
  auto p = TempFile("quantnli_empty.jsonl", "");
  auto r = LoadDataset(p.string(), DatasetFormat::kJsonl, Profile("awpnli"));
  EXPECT_TRUE(r.pairs.empty());
  auto rep = EvaluateDataset(r.pairs, "awpnli", 2, LexiconSet::Default(), Config{});
  EXPECT_EQ(rep.n, 0u);
  EXPECT_EQ(rep.accuracy, 0);
  fs::remove(p);
}

TEST(Load, MissingFileThrows) {
  EXPECT_THROW(LoadDataset("/nonexistent/x.jsonl", DatasetFormat::kJsonl,
                           Profile("awpnli")),
               std::runtime_error);
}

TEST(Resolve, ByProfileNameInDataDir) {
  Config cfg;
  cfg.data_dir = kCorpora;
  auto r = ResolveDataset("stress-test", cfg);
  ASSERT_TRUE(r);
  EXPECT_EQ(fs::path(r->path).filename(), "stresstest_mini.jsonl");
  EXPECT_EQ(r->profile.arity, 3);
  auto byfile = ResolveDataset(kCorpora + "/newsnli_mini.jsonl", cfg);
  ASSERT_TRUE(byfile);
  EXPECT_EQ(byfile->profile.name, "newsnli");
  cfg.data_dir = "/nonexistent";
  EXPECT_FALSE(ResolveDataset("awpnli", cfg));
}

TEST(Majority, SinglePairIsPerfect) {
  SentencePair p;
  p.gold = Label::kNeutral;
  auto rep = MajorityBaseline({p}, "one", 3);
  EXPECT_DOUBLE_EQ(rep.majority_accuracy, 1.0);
}

TEST(Majority, TieGoesToEntailment) {
  std::vector<SentencePair> ps(4);
  ps[0].gold = ps[1].gold = Label::kNeutral;
  ps[2].gold = ps[3].gold = Label::kEntailment;
  auto rep = MajorityBaseline(ps, "tie", 3);
  EXPECT_EQ(rep.majority_label, Label::kEntailment);
  EXPECT_DOUBLE_EQ(rep.majority_accuracy, 0.5);
}

TEST(Evaluate, ReportIsSelfConsistent) {
  auto r = Load("stresstest_mini.jsonl", "stress-test");
  Config cfg;
  cfg.threads = 2;
  auto rep = EvaluateDataset(r.pairs, "stress-test", 3, LexiconSet::Default(), cfg);
  EXPECT_EQ(rep.n, r.pairs.size());
  EXPECT_EQ(rep.per_pair.size(), rep.n);
  size_t correct = 0, total = 0;
  for (const auto &pp : rep.per_pair) correct += pp.gold == pp.predicted;
  for (const auto &[g, row] : rep.confusion)
    for (const auto &[p, n] : row) total += n;
  EXPECT_EQ(correct, rep.correct);
  EXPECT_EQ(total, rep.n);
  EXPECT_NEAR(rep.accuracy, double(rep.correct) / rep.n, 1e-9);
  EXPECT_NEAR(rep.delta, rep.accuracy - rep.majority_accuracy, 1e-9);
  auto j = ReportToJson(rep);
  EXPECT_EQ(j["format"], "quantnli-eval-report");
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["per_pair"].size(), rep.n);
}

TEST(Evaluate, ThreadCountDoesNotChangeTheReport) {
  auto r = Load("awpnli_mini.jsonl", "awpnli");
  Config one, four;
  one.threads = 1;
  four.threads = 4;
  EXPECT_EQ(ReportToString(EvaluateDataset(r.pairs, "awpnli", 2, LexiconSet::Default(), one)),
            ReportToString(EvaluateDataset(r.pairs, "awpnli", 2, LexiconSet::Default(), four)));
}

TEST(Evaluate, IdentityPairsAllEntail) {
  std::vector<SentencePair> ps;
  for (const char *s : {"He has 3 apples.", "Rwanda has dispatched 1917 soldiers.",
                        "Voters approved the measure with 61 percent of the vote.",
                        "Between 20 and 30 people were trapped in the casino."}) {
    SentencePair p;
    p.premise = p.hypothesis = s;
    p.gold = Label::kEntailment;
    p.arity = 3;
    ps.push_back(p);
  }
  auto rep = EvaluateDataset(ps, "identity", 3, LexiconSet::Default(), Config{});
  EXPECT_DOUBLE_EQ(rep.accuracy, 1.0);
}

TEST(Perturb, ChangesTheSharedNumber) {
  SentencePair p;
  p.premise = "In addition to 79 fatalities , some 170 passengers were injured.";
  p.hypothesis = "The crash took the lives of 79 people and injured some 170";
  p.gold = Label::kEntailment;
  p.arity = 2;
  PerturbStats st;
  auto out = PerturbEntailed({p}, 13, &st);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(st.perturbed, 1u);
  EXPECT_EQ(out[0].premise, p.premise);
  EXPECT_NE(out[0].hypothesis, p.hypothesis);
  EXPECT_EQ(out[0].gold, Label::kNotEntails);
  const bool is78or80 =
      out[0].hypothesis == "The crash took the lives of 80 people and injured some 170" ||
      out[0].hypothesis == "The crash took the lives of 78 people and injured some 170" ||
      out[0].hypothesis == "The crash took the lives of 79 people and injured some 171" ||
      out[0].hypothesis == "The crash took the lives of 79 people and injured some 169";
  EXPECT_TRUE(is78or80) << out[0].hypothesis;
}

TEST(Perturb, SkipsPairsWithoutSharedQuantity) {
  SentencePair p;
  p.premise = "He has 3 apples.";
  p.hypothesis = "He has three apples.";
  p.gold = Label::kEntailment;
  PerturbStats st;
  EXPECT_TRUE(PerturbEntailed({p}, 1, &st).empty());
  EXPECT_EQ(st.skipped, 1u);
  p.gold = Label::kNeutral;
  EXPECT_TRUE(PerturbEntailed({p}, 1, &st).empty());
}

TEST(Perturb, SeededAndDeterministic) {
  auto r = Load("newsnli_mini.jsonl", "newsnli");
  auto a = PerturbEntailed(r.pairs, 5), b = PerturbEntailed(r.pairs, 5);
  ASSERT_EQ(a.size(), b.size());
  for (size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].hypothesis, b[k].hypothesis);
}

TEST(Perturb, KeepsNumberFormatting) {
  SentencePair p;
  p.premise = "The airline carried 1.5 million passengers and 2,000 pets.";
  p.hypothesis = "The airline carried 1.5 million passengers and 2,000 pets.";
  p.gold = Label::kEntailment;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto out = PerturbEntailed({p}, seed);
    ASSERT_EQ(out.size(), 1u);
    const auto &h = out[0].hypothesis;
    const bool ok = h.find("1.4 million") != std::string::npos ||
                    h.find("1.6 million") != std::string::npos ||
                    h.find("1,999 pets") != std::string::npos ||
                    h.find("2,001 pets") != std::string::npos;
    EXPECT_TRUE(ok) << h;
  }
}

TEST(Probe, FlipRateIsAFraction) {
  auto r = Load("newsnli_mini.jsonl", "newsnli");
  auto probe = PerturbationProbe(r.pairs, LexiconSet::Default(), Config{});
  EXPECT_LE(probe.flipped, probe.perturbed);
  EXPECT_LE(probe.perturbed, probe.predicted_entailed);
  if (probe.perturbed) {
    EXPECT_DOUBLE_EQ(probe.flip_rate, double(probe.flipped) / probe.perturbed);
  }
}

}  // namespace
}  // namespace quantnli
