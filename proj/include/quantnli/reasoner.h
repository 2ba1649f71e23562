#ifndef QUANTNLI_REASONER_H_
#define QUANTNLI_REASONER_H_

#include <optional>
#include <string>
#include <vector>

#include "quantnli/composer.h"
#include "quantnli/lexicon.h"
#include "quantnli/model.h"
#include "quantnli/parser.h"
#include "quantnli/pruner.h"

namespace quantnli {

struct EngineConfig {
  double theta = 0.6;  // context similarity threshold
  ComposerOptions composer;
  size_t max_premises = 6;  // premise quantities per symbol list
};

enum class SimilarityClass { kEntail, kContradict, kNeutral };
const char *SimilarityClassName(SimilarityClass s);

// Jaccard similarity of the lowercased word tokens of two sentences,
// ignoring tokens inside quantity mentions and punctuation. Two empty sets
// have similarity 1.
double ContextSimilarity(const ParsedSentence &p, const ParsedSentence &h);

// Opposed flux directions, antonymous adjectives, or disjoint values.
bool ConflictSignal(const NumSet &p, const NumSet &h, const LexiconSet &lex);

// kContradict when units are compatible, sim >= theta and a conflict
// signal holds; kEntail when units are compatible, sim >= theta and there
// is no conflict; kNeutral otherwise.
SimilarityClass MaxSimilarityClass(const NumSet &p, const NumSet &h,
                                   double sim, double theta,
                                   const LexiconSet &lex);

// p.val is a subset of h.val (after ratio/percent alignment).
bool ValueMatch(const NumSet &p, const NumSet &h);

enum class VerdictStatus { kTrue, kFalse, kContradiction };
const char *VerdictStatusName(VerdictStatus s);

struct QuantityVerdict {
  NumSet hyp;
  VerdictStatus status = VerdictStatus::kFalse;
  std::optional<size_t> premise;         // deciding premise quantity
  std::optional<Justification> equation;  // first justifying equation
};

struct Prediction {
  EntailmentLabel label = EntailmentLabel::kNeutral;
  std::vector<QuantityVerdict> verdicts;
};

// Aggregates per-quantity evidence into a label. `equations[h]` holds the
// justified equations of hypothesis quantity h.
Prediction Predict(const std::vector<NumSet> &premises,
                   const std::vector<NumSet> &hyps,
                   const std::vector<CompatiblePair> &pairs,
                   const std::vector<std::vector<Justification>> &equations,
                   double sim, double theta, const LexiconSet &lex);

struct Classification {
  Label label = Label::kNeutral;
  EntailmentLabel three_way = EntailmentLabel::kNeutral;
  ParsedSentence premise;
  ParsedSentence hypothesis;
  std::vector<CompatiblePair> pairs;
  std::vector<std::vector<Justification>> equations;
  std::vector<QuantityVerdict> verdicts;
  double similarity = 0;
  std::vector<std::string> diagnostics;
};

// segment -> parse -> prune -> compose -> predict, mapped onto the pair's
// label space. Never throws on linguistic input; failures degrade to
// neutral with a diagnostic.
Classification ClassifyPair(const SentencePair &pair, const LexiconSet &lex,
                            const EngineConfig &cfg = {});

}  // namespace quantnli

#endif  // QUANTNLI_REASONER_H_
