#ifndef QUANTNLI_PRUNER_H_
#define QUANTNLI_PRUNER_H_

#include <string>
#include <string_view>
#include <vector>

#include "quantnli/lexicon.h"
#include "quantnli/model.h"

namespace quantnli {

// Lowercased, singularized unit used for all comparisons.
std::string UnitKey(std::string_view unit);

// Unit-level test: same key, one-hop synonym, or a person type against a
// synonym of "person". Symmetric.
bool UnitsCompatible(std::string_view a, std::string_view b,
                     const LexiconSet &lex);

// Unit test plus the ratio rule: a ratio quantity ("half") is comparable
// with a percentage.
bool Compatible(const NumSet &p, const NumSet &h, const LexiconSet &lex);

struct CompatiblePair {
  size_t premise = 0;
  size_t hypothesis = 0;
  friend bool operator==(const CompatiblePair &,
                         const CompatiblePair &) = default;
};

// All compatible (premise, hypothesis) index pairs ordered by hypothesis
// index, then premise index.
std::vector<CompatiblePair> CompatiblePairs(const std::vector<NumSet> &premises,
                                            const std::vector<NumSet> &hyps,
                                            const LexiconSet &lex);

// Returns `n` rescaled to the counterpart's scale: a ratio paired with a
// percentage is multiplied by 100, a percentage paired with a ratio divided
// by 100. Otherwise `n` unchanged.
NumSet AlignTo(const NumSet &n, const NumSet &counterpart);

}  // namespace quantnli

#endif  // QUANTNLI_PRUNER_H_
