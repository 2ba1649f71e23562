#ifndef QUANTNLI_SRC_TEXT_UTIL_H_
#define QUANTNLI_SRC_TEXT_UTIL_H_

#include <string>
#include <string_view>

#include "quantnli/lexicon.h"
#include "quantnli/tokenizer.h"

// Closed-class word lists and shallow part-of-speech guesses that stand in
// for a tagger/dependency parse.
namespace quantnli::text {

bool IsFunctionWord(std::string_view lower);
bool IsAuxiliary(std::string_view lower);
bool IsModal(std::string_view lower);
// "more", "fewer", "extra", ... between a number and its noun ("two more
// times").
bool IsIncrementWord(std::string_view lower);
bool IsMonth(std::string_view lower);
bool IsOrdinalSuffix(std::string_view lower);
bool IsOrdinalWord(std::string_view lower);

// Verb guess: closed list of frequent verbs plus -ed/-ing morphology.
bool IsVerbLike(const Token &t, const LexiconSet &lex);

// Adverb guess (-ly).
bool IsAdverbLike(const Token &t);

// Noun-ish open-class word: a word that is not a function word, verb,
// adverb, number word or month.
bool IsContentWord(const Token &t, const LexiconSet &lex);

// Head nouns that refer back to an earlier quantity ("ones", "them").
bool IsAnaphoricUnit(std::string_view lower);

// Crude lemma for verb slot matching.
std::string VerbStem(std::string_view lower);

bool IsClauseBoundary(const Token &t);

}  // namespace quantnli::text

#endif  // QUANTNLI_SRC_TEXT_UTIL_H_
