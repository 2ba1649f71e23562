#include "quantnli/reasoner.h"

#include <exception>
#include <set>

namespace quantnli {

namespace {

std::set<std::string> ContextWords(const ParsedSentence &s) {
  std::vector<bool> inside(s.tokens.size(), false);
  for (const auto &m : s.mentions) {
    for (size_t k = m.token_begin; k < m.token_end; ++k) inside[k] = true;
  }
  std::set<std::string> out;
  for (size_t k = 0; k < s.tokens.size(); ++k) {
    if (!inside[k] && s.tokens[k].IsWord()) out.insert(s.tokens[k].lower);
  }
  return out;
}

}  // namespace

const char *SimilarityClassName(SimilarityClass s) {
  switch (s) {
    case SimilarityClass::kEntail: return "e";
    case SimilarityClass::kContradict: return "c";
    case SimilarityClass::kNeutral: return "n";
  }
  return "?";
}

const char *VerdictStatusName(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kTrue: return "true";
    case VerdictStatus::kFalse: return "false";
    case VerdictStatus::kContradiction: return "contradiction";
  }
  return "?";
}

double ContextSimilarity(const ParsedSentence &p, const ParsedSentence &h) {
  const auto a = ContextWords(p), b = ContextWords(h);
  if (a.empty() && b.empty()) return 1.0;
  size_t common = 0;
  for (const auto &w : a) common += b.count(w);
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

bool ConflictSignal(const NumSet &p, const NumSet &h, const LexiconSet &lex) {
  if (p.flux && h.flux && IsIncrease(*p.flux) != IsIncrease(*h.flux)) {
    return true;
  }
  if (p.adj && h.adj && lex.AreAntonyms(p.adj->text, h.adj->text)) {
    return true;
  }
  const NumSet aligned = AlignTo(p, h);
  return Disjoint(aligned.val, h.val);
}

SimilarityClass MaxSimilarityClass(const NumSet &p, const NumSet &h,
                                   double sim, double theta,
                                   const LexiconSet &lex) {
  if (!Compatible(p, h, lex) || sim < theta) return SimilarityClass::kNeutral;
  return ConflictSignal(p, h, lex) ? SimilarityClass::kContradict
                                   : SimilarityClass::kEntail;
}

bool ValueMatch(const NumSet &p, const NumSet &h) {
  return IsSubset(AlignTo(p, h).val, h.val);
}

Prediction Predict(const std::vector<NumSet> &premises,
                   const std::vector<NumSet> &hyps,
                   const std::vector<CompatiblePair> &pairs,
                   const std::vector<std::vector<Justification>> &equations,
                   double sim, double theta, const LexiconSet &lex) {
  Prediction out;
  for (const auto &h : hyps) {
    QuantityVerdict v;
    v.hyp = h;
    out.verdicts.push_back(std::move(v));
  }
  if (pairs.empty()) return out;

  for (size_t h = 0; h < hyps.size(); ++h) {
    std::vector<size_t> support;
    for (const auto &pr : pairs) {
      if (pr.hypothesis == h) support.push_back(pr.premise);
    }
    if (support.empty()) return out;
    QuantityVerdict &v = out.verdicts[h];
    for (size_t p : support) {
      const SimilarityClass s =
          MaxSimilarityClass(premises[p], hyps[h], sim, theta, lex);
      if (s == SimilarityClass::kEntail) {
        v.status = ValueMatch(premises[p], hyps[h]) ? VerdictStatus::kTrue
                                                    : VerdictStatus::kFalse;
        v.premise = p;
      } else if (s == SimilarityClass::kContradict) {
        v.status = VerdictStatus::kContradiction;
        v.premise = p;
      }
    }
  }
  for (size_t h = 0; h < hyps.size(); ++h) {
    if (h < equations.size() && !equations[h].empty()) {
      out.verdicts[h].status = VerdictStatus::kTrue;
      out.verdicts[h].equation = equations[h].front();
    }
  }
  size_t true_count = 0;
  for (const auto &v : out.verdicts) {
    if (v.status == VerdictStatus::kContradiction) {
      out.label = EntailmentLabel::kContradiction;
      return out;
    }
    true_count += v.status == VerdictStatus::kTrue;
  }
  if (true_count == out.verdicts.size()) out.label = EntailmentLabel::kEntailment;
  return out;
}

Classification ClassifyPair(const SentencePair &pair, const LexiconSet &lex,
                            const EngineConfig &cfg) {
  Classification c;
  try {
    c.premise = ParseSentence(pair.premise, lex, Source::kPremise);
    c.hypothesis = ParseSentence(pair.hypothesis, lex, Source::kHypothesis);
    for (const auto &d : c.premise.diagnostics) {
      c.diagnostics.push_back("premise: " + d);
    }
    for (const auto &d : c.hypothesis.diagnostics) {
      c.diagnostics.push_back("hypothesis: " + d);
    }
    const auto &P = c.premise.numsets;
    const auto &H = c.hypothesis.numsets;
    c.similarity = ContextSimilarity(c.premise, c.hypothesis);
    if (!H.empty()) {
      c.pairs = CompatiblePairs(P, H, lex);
      for (size_t h = 0; h < H.size(); ++h) {
        c.equations.push_back(
            Justify(H[h], P, c.pairs, h, lex, cfg.composer, cfg.max_premises));
      }
      Prediction pred =
          Predict(P, H, c.pairs, c.equations, c.similarity, cfg.theta, lex);
      c.three_way = pred.label;
      c.verdicts = std::move(pred.verdicts);
    } else {
      c.diagnostics.push_back("no hypothesis quantities");
    }
  } catch (const std::exception &e) {
    c.three_way = EntailmentLabel::kNeutral;
    c.diagnostics.push_back(std::string("pipeline error: ") + e.what());
  }
  c.label = ToLabelSpace(c.three_way, pair.arity);
  return c;
}

}  // namespace quantnli
