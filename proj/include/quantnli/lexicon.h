#ifndef QUANTNLI_LEXICON_H_
#define QUANTNLI_LEXICON_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "quantnli/model.h"
#include "quantnli/number.h"

namespace quantnli {

enum class FluxDirection { kIncrease, kDecrease };

// Gazetteers and lexicons consulted by the segmenter, parser and pruner.
// Every key is stored lowercased and lookups lowercase their argument.
//
// On-disk format (one directory, UTF-8, '#' starts a comment line):
//   approximators.txt       one phrase per line (multi-word allowed)
//   flux_words.tsv          token <TAB> increase|decrease
//   freq_markers.txt        one token per line
//   time_units.txt          one token per line
//   units.txt               one unit per line
//   unit_synonyms.tsv       unit <TAB> synonym; repeated keys accumulate
//   person_types.txt        nationalities and occupations
//   number_words.tsv        word <TAB> value
//   ratio_words.tsv         word <TAB> value
//   magnitude_suffixes.tsv  suffix <TAB> multiplier
//   antonyms.tsv            word <TAB> antonym (symmetric)
class LexiconSet {
 public:
  // The lexicon compiled into the library from data/lexicon.
  static const LexiconSet &Default();

  // Loads every file from a directory. Missing files leave the
  // corresponding table empty. Throws std::runtime_error when the directory
  // does not exist.
  static LexiconSet LoadDirectory(const std::string &dir);

  // Builds from in-memory file contents keyed by file name.
  static LexiconSet FromContents(
      const std::map<std::string, std::string> &files);

  // Approximator phrases, each as a token sequence.
  const std::vector<std::vector<std::string>> &approximators() const {
    return approximators_;
  }
  std::optional<FluxDirection> FluxWord(std::string_view token) const;
  bool IsFreqMarker(std::string_view token) const;
  bool IsTimeUnit(std::string_view token) const;
  bool IsKnownUnit(std::string_view token) const;
  // Multi-word known units ("per cent"), as token sequences.
  const std::vector<std::vector<std::string>> &multiword_units() const {
    return multiword_units_;
  }
  bool IsPersonType(std::string_view token) const;
  std::optional<Rational> NumberWord(std::string_view token) const;
  std::optional<Rational> RatioWord(std::string_view token) const;
  std::optional<Rational> MagnitudeSuffix(std::string_view suffix) const;
  bool AreAntonyms(std::string_view a, std::string_view b) const;

  // One-hop synonym/hypernym relation, symmetric.
  bool AreSynonyms(std::string_view a, std::string_view b) const;
  const std::set<std::string> &Synonyms(std::string_view unit) const;

  // Adds a synonym edge (used by tests and by callers extending the shipped
  // lexicon).
  void AddSynonym(const std::string &a, const std::string &b);

 private:
  std::vector<std::vector<std::string>> approximators_;
  std::map<std::string, FluxDirection, std::less<>> flux_words_;
  std::set<std::string, std::less<>> freq_markers_;
  std::set<std::string, std::less<>> time_units_;
  std::set<std::string, std::less<>> known_units_;
  std::vector<std::vector<std::string>> multiword_units_;
  std::map<std::string, std::set<std::string>, std::less<>> unit_synonyms_;
  std::set<std::string, std::less<>> person_types_;
  std::map<std::string, Rational, std::less<>> number_words_;
  std::map<std::string, Rational, std::less<>> ratio_words_;
  std::map<std::string, Rational, std::less<>> magnitude_suffixes_;
  std::set<std::pair<std::string, std::string>> antonyms_;
};

std::string ToLower(std::string_view s);

// Suffix-stripping singularization: "ies" -> "y", sibilant + "es" -> stem,
// trailing "s" dropped unless the word ends in "ss", "us", "sis" or "xis"
// ("iraqis" -> "iraqi", "analysis" kept).
std::string Singularize(std::string_view word);

}  // namespace quantnli

#endif  // QUANTNLI_LEXICON_H_
