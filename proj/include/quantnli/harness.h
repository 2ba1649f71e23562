#ifndef QUANTNLI_HARNESS_H_
#define QUANTNLI_HARNESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quantnli/lexicon.h"
#include "quantnli/model.h"
#include "quantnli/reasoner.h"

namespace quantnli {

// How to read one test set.
struct DatasetProfile {
  std::string name;                   // "awpnli"
  std::vector<std::string> patterns;  // normalized file-stem fragments
  int arity = 3;
  std::string premise_field = "sentence1";
  std::string hypothesis_field = "sentence2";
  std::string label_field = "gold_label";
  std::vector<std::string> id_fields = {"pairID", "id"};
};

// RTE-Quant, NewsNLI, RedditNLI, Stress Test, AwpNLI.
const std::vector<DatasetProfile> &BuiltinProfiles();

struct Config {
  EngineConfig engine;
  std::uint64_t seed = 13;
  std::string lexicon_dir;  // empty: compiled-in lexicon
  std::string data_dir;     // empty: $QUANTNLI_DATA_DIR
  int threads = 0;          // 0: hardware concurrency
  std::vector<DatasetProfile> datasets = BuiltinProfiles();

  // Profile by name or alias ("stress-test", "StressTest"); nullopt if
  // none matches.
  std::optional<DatasetProfile> Profile(const std::string &name) const;
};

// Parses a config document. Unknown keys are rejected; missing keys keep
// their defaults. Throws std::runtime_error on malformed input.
Config ConfigFromJson(const nlohmann::json &j);

// Reads `path`, or $QUANTNLI_CONFIG when `path` is empty, or returns the
// defaults when neither is set.
Config LoadConfig(const std::string &path = "");

// Lexicon named by the config, or the compiled-in one.
LexiconSet LoadLexicon(const Config &cfg);

enum class DatasetFormat { kJsonl, kTsv };

// .tsv/.txt map to TSV, everything else to JSONL.
DatasetFormat FormatFromPath(const std::string &path);

struct LoadResult {
  std::vector<SentencePair> pairs;
  size_t skipped = 0;
  std::vector<std::string> diagnostics;
};

// Reads a test set. Records lacking a field or carrying an unknown label
// are skipped and counted. Throws std::runtime_error if the file cannot be
// opened.
LoadResult LoadDataset(const std::string &path, DatasetFormat format,
                       const DatasetProfile &profile);

// Normalized key: lowercase letters and digits only.
std::string NormalizeName(const std::string &s);

// `name` itself if it is an existing file, else the first file (sorted) in
// `data_dir` whose normalized stem contains one of the profile patterns.
std::optional<std::string> ResolveDatasetPath(const std::string &name,
                                              const std::string &data_dir,
                                              const DatasetProfile &profile);

// Data directory from the config or $QUANTNLI_DATA_DIR.
std::string DataDir(const Config &cfg);

struct ResolvedDataset {
  DatasetProfile profile;
  std::string path;
};

// Accepts a profile name ("awpnli") looked up in the data directory, or a
// file path whose name selects the profile (unknown names get a three-way
// default profile). nullopt when no file is found.
std::optional<ResolvedDataset> ResolveDataset(const std::string &arg,
                                              const Config &cfg);

struct PairRecord {
  std::string id;
  Label gold = Label::kNeutral;
  Label predicted = Label::kNeutral;
};

struct EvalReport {
  std::string dataset;
  int arity = 3;
  size_t n = 0;
  size_t correct = 0;
  double accuracy = 0;
  double majority_accuracy = 0;
  std::optional<Label> majority_label;
  double delta = 0;
  // gold label name -> predicted label name -> count
  std::map<std::string, std::map<std::string, size_t>> confusion;
  std::vector<PairRecord> per_pair;
  size_t skipped = 0;
};

inline constexpr int kReportVersion = 1;

// Always predicts the most frequent gold label (ties go to the label that
// comes first in entailment, contradiction, neutral, not-entails order).
EvalReport MajorityBaseline(const std::vector<SentencePair> &pairs,
                            const std::string &dataset, int arity);

// Classifies every pair, fanning out over `cfg.threads` workers. The
// report does not depend on the thread count.
EvalReport EvaluateDataset(const std::vector<SentencePair> &pairs,
                           const std::string &dataset, int arity,
                           const LexiconSet &lex, const Config &cfg);

nlohmann::json ReportToJson(const EvalReport &r);
// Pretty-printed JSON with a trailing newline.
std::string ReportToString(const EvalReport &r);

struct PerturbStats {
  size_t input = 0;
  size_t eligible = 0;  // gold entailment
  size_t perturbed = 0;
  size_t skipped = 0;   // no shared quantity
};

// For each gold-entailment pair whose hypothesis repeats a number token of
// the premise, replaces that token with a nearby value absent from the
// premise (integer +-1, else +-1 in the last decimal place) and relabels
// the pair as a contradiction. The choice of token and sign is drawn from a
// generator seeded with `seed`.
std::vector<SentencePair> PerturbEntailed(const std::vector<SentencePair> &pairs,
                                          std::uint64_t seed,
                                          PerturbStats *stats = nullptr);

struct ProbeResult {
  size_t predicted_entailed = 0;  // gold and predicted entailment
  size_t perturbed = 0;
  size_t flipped = 0;             // perturbed pairs predicted non-entailing
  double flip_rate = 0;
};

// Perturbs the pairs the engine gets right as entailed and measures how
// many of the perturbed counterparts it labels non-entailing.
ProbeResult PerturbationProbe(const std::vector<SentencePair> &pairs,
                              const LexiconSet &lex, const Config &cfg);

}  // namespace quantnli

#endif  // QUANTNLI_HARNESS_H_
