#ifndef QUANTNLI_SEGMENTER_H_
#define QUANTNLI_SEGMENTER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quantnli/interval.h"
#include "quantnli/lexicon.h"
#include "quantnli/model.h"
#include "quantnli/tokenizer.h"

namespace quantnli {

enum class BoundMarker { kLessThan, kMoreThan, kAtLeast, kAtMost, kExact };

const char *BoundMarkerName(BoundMarker b);

// A quantity-bearing phrase located in a sentence.
struct QuantityMention {
  Span span;                 // character range in the sentence
  size_t token_begin = 0;    // token range [token_begin, token_end)
  size_t token_end = 0;
  std::vector<Token> tokens;
  std::vector<size_t> cardinal_positions;  // sentence token indices
  Interval raw_value = Interval::Point(0);
  std::optional<BoundMarker> bound_marker;
  bool range_marker = false;
  bool percent = false;
  bool ratio = false;
  bool ordinal = false;
};

// Numeric reading of a mention's tokens.
struct NormalizedNumber {
  Interval value = Interval::Point(0);
  std::optional<BoundMarker> bound;
  bool range = false;
  bool percent = false;
  bool ratio = false;
  bool ordinal = false;
};

// Interprets a token sequence holding a number, written number, bound
// phrase ("fewer than 10"), explicit range ("between 20 and 30", "20 to
// 30"), ratio ("half", "1 in 4") and/or percentage. Tokens after the
// numeric part (the head noun phrase) are ignored. Returns nullopt when no
// grammar rule applies.
std::optional<NormalizedNumber> NormalizeNumberDetailed(
    const std::vector<Token> &tokens, const LexiconSet &lex);

std::optional<Interval> NormalizeNumber(const std::vector<Token> &tokens,
                                        const LexiconSet &lex);

// Convenience overload that tokenizes first.
std::optional<Interval> NormalizeNumber(std::string_view text,
                                        const LexiconSet &lex);

// Token indices covered by temporal expressions (years, clock times,
// month-day dates, decades).
std::vector<bool> TemporalMask(const std::vector<Token> &tokens);

// Locates quantity mentions in order of appearance. Mentions never overlap.
// Cardinals inside temporal expressions are skipped. Diagnostics for
// dropped cardinals are appended to `diagnostics` when non-null.
std::vector<QuantityMention> Segment(const std::vector<Token> &tokens,
                                     std::string_view sentence,
                                     const LexiconSet &lex,
                                     std::vector<std::string> *diagnostics =
                                         nullptr);

std::vector<QuantityMention> Segment(std::string_view sentence,
                                     const LexiconSet &lex);

}  // namespace quantnli

#endif  // QUANTNLI_SEGMENTER_H_
