#ifndef QUANTNLI_MODEL_H_
#define QUANTNLI_MODEL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quantnli/interval.h"

namespace quantnli {

// Half-open range [begin, end) into a token or character sequence, plus the
// surface text it covers.
struct Span {
  size_t begin = 0;
  size_t end = 0;
  std::string text;

  bool empty() const { return begin == end; }
  friend bool operator==(const Span &, const Span &) = default;
};

enum class Flux { kIncreaseTo, kIncreaseFrom, kDecreaseTo, kDecreaseFrom };

const char *FluxName(Flux f);
bool IsIncrease(Flux f);

enum class Source { kPremise, kHypothesis };

// Grounded quantity: value range plus the linguistic context that anchors it.
struct NumSet {
  Interval val = Interval::Point(0);
  Span unit;  // never empty
  std::optional<Span> ent;
  std::optional<Span> adj;
  std::vector<Span> loc;
  std::optional<Span> verb;
  std::vector<Span> freq;
  std::optional<Flux> flux;
  bool approximate = false;
  // Ratio words ("half", "1 in 4"); rescaled against percentages when paired.
  bool ratio = false;
  Source source = Source::kPremise;
  Span mention;  // character span in the source sentence

  // Lowercased unit text.
  const std::string &unit_text() const { return unit.text; }
};

// Three-way entailment label.
enum class EntailmentLabel { kEntailment, kContradiction, kNeutral };

// Scored label. Two-way test sets collapse contradiction and neutral into
// kNotEntails.
enum class Label { kEntailment, kContradiction, kNeutral, kNotEntails };

const char *LabelName(Label l, int arity);
std::optional<Label> ParseLabel(std::string_view text, int arity);

// Maps a three-way prediction onto the label space of a test set.
Label ToLabelSpace(EntailmentLabel label, int arity);

// Collapses contradiction/neutral to kNotEntails for two-way sets.
Label CollapseLabel(Label label, int arity);

struct SentencePair {
  std::string id;
  std::string premise;
  std::string hypothesis;
  Label gold = Label::kNeutral;
  std::string dataset;
  int arity = 3;
};

}  // namespace quantnli

#endif  // QUANTNLI_MODEL_H_
