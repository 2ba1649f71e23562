#include "quantnli/pruner.h"

namespace quantnli {

namespace {

bool IsPercent(const NumSet &n) { return UnitKey(n.unit_text()) == "%"; }

// "person" itself or a generic word for it ("people", "individual"); a
// specific person type such as "soldier" does not count.
bool IsPersonLike(const std::string &key, const LexiconSet &lex) {
  if (key == "person") return true;
  return lex.AreSynonyms(key, "person") && !lex.IsPersonType(key);
}

}  // namespace

std::string UnitKey(std::string_view unit) { return Singularize(unit); }

bool UnitsCompatible(std::string_view a, std::string_view b,
                     const LexiconSet &lex) {
  const std::string ka = UnitKey(a), kb = UnitKey(b);
  if (ka == kb) return true;
  if (lex.AreSynonyms(ka, kb)) return true;
  if (lex.IsPersonType(ka) && IsPersonLike(kb, lex)) return true;
  if (lex.IsPersonType(kb) && IsPersonLike(ka, lex)) return true;
  return false;
}

bool Compatible(const NumSet &p, const NumSet &h, const LexiconSet &lex) {
  if ((p.ratio && IsPercent(h)) || (h.ratio && IsPercent(p))) return true;
  return UnitsCompatible(p.unit_text(), h.unit_text(), lex);
}

std::vector<CompatiblePair> CompatiblePairs(const std::vector<NumSet> &premises,
                                            const std::vector<NumSet> &hyps,
                                            const LexiconSet &lex) {
  std::vector<CompatiblePair> out;
  for (size_t h = 0; h < hyps.size(); ++h) {
    for (size_t p = 0; p < premises.size(); ++p) {
      if (Compatible(premises[p], hyps[h], lex)) out.push_back({p, h});
    }
  }
  return out;
}

NumSet AlignTo(const NumSet &n, const NumSet &counterpart) {
  NumSet out = n;
  if (n.ratio && !counterpart.ratio && IsPercent(counterpart)) {
    out.val = Scale(n.val, 100);
  } else if (IsPercent(n) && !n.ratio && counterpart.ratio) {
    out.val = Scale(n.val, Rational(1, 100));
  }
  return out;
}

}  // namespace quantnli
