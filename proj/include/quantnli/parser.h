#ifndef QUANTNLI_PARSER_H_
#define QUANTNLI_PARSER_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quantnli/lexicon.h"
#include "quantnli/model.h"
#include "quantnli/segmenter.h"
#include "quantnli/tokenizer.h"

namespace quantnli {

enum class ParseError { kMissingUnit, kAlreadyApproximate };

const char *ParseErrorName(ParseError e);

using ParseResult = std::variant<NumSet, ParseError>;

// Fraction by which approximated values are widened on each side.
Rational ApproximationFraction();

// Widens `n.val` by the approximation fraction and marks it approximate.
// Fails with kAlreadyApproximate if it was widened before.
std::optional<ParseError> ApplyApproximation(NumSet &n);

// Grounds one mention. `previous` is the last NumSet of the same sentence
// and is only consulted to resolve anaphoric heads ("3 of them").
ParseResult ParseQuantity(const QuantityMention &mention,
                          std::string_view sentence, const LexiconSet &lex,
                          Source source = Source::kPremise,
                          const NumSet *previous = nullptr);

// Same, reusing an existing tokenization of `sentence`.
ParseResult ParseQuantity(const QuantityMention &mention,
                          const std::vector<Token> &tokens,
                          std::string_view sentence, const LexiconSet &lex,
                          Source source, const NumSet *previous);

struct ParsedSentence {
  std::vector<Token> tokens;
  std::vector<QuantityMention> mentions;
  std::vector<NumSet> numsets;
  std::vector<std::string> diagnostics;
};

// Segments and parses every mention; dropped mentions are reported in
// `diagnostics`.
ParsedSentence ParseSentence(std::string_view sentence, const LexiconSet &lex,
                             Source source);

}  // namespace quantnli

#endif  // QUANTNLI_PARSER_H_
