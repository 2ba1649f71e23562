#include "quantnli/model.h"

#include <algorithm>
#include <cctype>

namespace quantnli {

const char *FluxName(Flux f) {
  switch (f) {
    case Flux::kIncreaseTo: return "increase_to";
    case Flux::kIncreaseFrom: return "increase_from";
    case Flux::kDecreaseTo: return "decrease_to";
    case Flux::kDecreaseFrom: return "decrease_from";
  }
  return "?";
}

bool IsIncrease(Flux f) {
  return f == Flux::kIncreaseTo || f == Flux::kIncreaseFrom;
}

const char *LabelName(Label l, int arity) {
  if (arity == 2) {
    return l == Label::kEntailment ? "entails" : "not-entails";
  }
  switch (l) {
    case Label::kEntailment: return "entailment";
    case Label::kContradiction: return "contradiction";
    case Label::kNeutral: return "neutral";
    case Label::kNotEntails: return "not-entails";
  }
  return "?";
}

std::optional<Label> ParseLabel(std::string_view text, int arity) {
  std::string s;
  for (char c : text) {
    if (c == ' ' || c == '_') c = '-';
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  const bool entail = s == "entailment" || s == "entails" || s == "entailed" ||
                      s == "yes" || s == "1" || s == "e";
  const bool contra = s == "contradiction" || s == "contradicts" || s == "c";
  const bool neutral = s == "neutral" || s == "n";
  const bool not_entail = s == "not-entailment" || s == "not-entails" ||
                          s == "non-entailment" || s == "no" || s == "0";
  if (arity == 2) {
    if (entail) return Label::kEntailment;
    if (contra || neutral || not_entail) return Label::kNotEntails;
    return std::nullopt;
  }
  if (entail) return Label::kEntailment;
  if (contra) return Label::kContradiction;
  if (neutral) return Label::kNeutral;
  return std::nullopt;
}

Label ToLabelSpace(EntailmentLabel label, int arity) {
  switch (label) {
    case EntailmentLabel::kEntailment: return Label::kEntailment;
    case EntailmentLabel::kContradiction:
      return arity == 2 ? Label::kNotEntails : Label::kContradiction;
    case EntailmentLabel::kNeutral:
      return arity == 2 ? Label::kNotEntails : Label::kNeutral;
  }
  return Label::kNeutral;
}

Label CollapseLabel(Label label, int arity) {
  if (arity == 2 && label != Label::kEntailment) return Label::kNotEntails;
  return label;
}

}  // namespace quantnli
