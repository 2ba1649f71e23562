#include "quantnli/segmenter.h"

#include <array>
#include <string>
#include <utility>

#include "text_util.h"

namespace quantnli {

namespace {

using Phrase = std::vector<std::string_view>;

struct BoundPhrase {
  Phrase words;
  BoundMarker marker;
};

// Longer phrases first so "no more than" wins over "more than".
const std::vector<BoundPhrase> &BoundPhrases() {
  static const std::vector<BoundPhrase> kPhrases = {
      {{"no", "more", "than"}, BoundMarker::kAtMost},
      {{"not", "more", "than"}, BoundMarker::kAtMost},
      {{"no", "less", "than"}, BoundMarker::kAtLeast},
      {{"no", "fewer", "than"}, BoundMarker::kAtLeast},
      {{"not", "less", "than"}, BoundMarker::kAtLeast},
      {{"a", "minimum", "of"}, BoundMarker::kAtLeast},
      {{"a", "maximum", "of"}, BoundMarker::kAtMost},
      {{"as", "many", "as"}, BoundMarker::kAtMost},
      {{"as", "much", "as"}, BoundMarker::kAtMost},
      {{"less", "than"}, BoundMarker::kLessThan},
      {{"fewer", "than"}, BoundMarker::kLessThan},
      {{"lower", "than"}, BoundMarker::kLessThan},
      {{"smaller", "than"}, BoundMarker::kLessThan},
      {{"shy", "of"}, BoundMarker::kLessThan},
      {{"more", "than"}, BoundMarker::kMoreThan},
      {{"greater", "than"}, BoundMarker::kMoreThan},
      {{"higher", "than"}, BoundMarker::kMoreThan},
      {{"larger", "than"}, BoundMarker::kMoreThan},
      {{"upwards", "of"}, BoundMarker::kMoreThan},
      {{"at", "least"}, BoundMarker::kAtLeast},
      {{"minimum", "of"}, BoundMarker::kAtLeast},
      {{"at", "most"}, BoundMarker::kAtMost},
      {{"up", "to"}, BoundMarker::kAtMost},
      {{"maximum", "of"}, BoundMarker::kAtMost},
      {{"upto"}, BoundMarker::kAtMost},
      {{"under"}, BoundMarker::kLessThan},
      {{"below"}, BoundMarker::kLessThan},
      {{"over"}, BoundMarker::kMoreThan},
      {{"above"}, BoundMarker::kMoreThan},
      {{"exceeding"}, BoundMarker::kMoreThan},
      {{"beyond"}, BoundMarker::kMoreThan},
      {{"exactly"}, BoundMarker::kExact},
      {{"precisely"}, BoundMarker::kExact},
  };
  return kPhrases;
}

// Length of `words` if it ends exactly at token index `end` (exclusive) and
// starts at or after `floor`; 0 otherwise.
template <typename Words>
size_t PhraseEndingAt(const std::vector<Token> &tokens, size_t end,
                      size_t floor, const Words &words) {
  if (words.empty() || end < words.size() || end - words.size() < floor) {
    return 0;
  }
  size_t start = end - words.size();
  for (size_t k = 0; k < words.size(); ++k) {
    if (tokens[start + k].lower != words[k]) return 0;
  }
  return words.size();
}

size_t ApproximatorEndingAt(const std::vector<Token> &tokens, size_t end,
                            size_t floor, const LexiconSet &lex) {
  size_t best = 0;
  for (const auto &phrase : lex.approximators()) {
    best = std::max(best, PhraseEndingAt(tokens, end, floor, phrase));
  }
  return best;
}

std::optional<std::pair<BoundMarker, size_t>> BoundEndingAt(
    const std::vector<Token> &tokens, size_t end, size_t floor) {
  for (const auto &bp : BoundPhrases()) {
    if (size_t len = PhraseEndingAt(tokens, end, floor, bp.words)) {
      return std::pair{bp.marker, len};
    }
  }
  return std::nullopt;
}

bool IsNumberWord(const Token &t, const LexiconSet &lex) {
  return t.IsWord() && lex.NumberWord(t.lower).has_value();
}

bool IsRatioWord(const Token &t, const LexiconSet &lex) {
  return t.IsWord() && lex.RatioWord(t.lower).has_value();
}

bool IsScaleWord(const Token &t, const LexiconSet &lex) {
  if (!t.IsWord()) return false;
  auto v = lex.NumberWord(t.lower);
  return v && (*v >= 100 || t.lower == "dozen");
}

bool IsPercentWord(const std::vector<Token> &tokens, size_t i, size_t *len) {
  if (i >= tokens.size()) return false;
  const Token &t = tokens[i];
  if (t.kind == TokenKind::kPercent || t.is("percent") || t.is("pct") ||
      t.is("percentage")) {
    *len = 1;
    return true;
  }
  if (t.is("per") && i + 1 < tokens.size() && tokens[i + 1].is("cent")) {
    *len = 2;
    return true;
  }
  return false;
}

// Combines written number words. Standard short-scale composition first;
// when the sequence is not well formed ("two fifty eight") the words are
// grouped into sub-hundred chunks and concatenated positionally.
std::optional<Rational> ComposeWritten(
    const std::vector<std::pair<std::string, Rational>> &words) {
  Rational total = 0, cur = 0;
  std::optional<Rational> last_scale;
  bool ok = true;
  for (const auto &[w, v] : words) {
    if (w == "dozen") {
      cur = (cur == 0 ? Rational(1) : cur) * 12;
    } else if (v == 100) {
      if (cur >= 100) ok = false;
      cur = (cur == 0 ? Rational(1) : cur) * 100;
    } else if (v >= 1000) {
      if (last_scale && *last_scale <= v) ok = false;
      total += (cur == 0 ? Rational(1) : cur) * v;
      cur = 0;
      last_scale = v;
    } else if (v >= 20) {
      if (cur.convert_to<long long>() % 100 != 0) ok = false;
      cur += v;
    } else {
      long long c = cur.convert_to<long long>() % 100;
      if (c % 10 != 0 || (c >= 10 && c < 20)) ok = false;
      cur += v;
    }
  }
  if (ok) return total + cur;

  std::string digits;
  for (size_t k = 0; k < words.size(); ++k) {
    const Rational &v = words[k].second;
    if (v >= 100 || words[k].first == "dozen") return std::nullopt;
    long long group = v.convert_to<long long>();
    if (v >= 20 && k + 1 < words.size() && words[k + 1].second < 10 &&
        words[k + 1].second > 0) {
      group += words[k + 1].second.convert_to<long long>();
      ++k;
    }
    digits += std::to_string(group);
  }
  return ParseDecimal(digits);
}

struct Run {
  Rational value;
  size_t begin = 0;
  size_t end = 0;
  bool ratio = false;
  bool ordinal = false;
  // Trailing magnitude ("million", "bn"), 1 if none. Lets "5 to 7 million"
  // read as 5e6 to 7e6.
  Rational scale = 1;
  std::vector<size_t> positions;
};

std::optional<Run> DigitRun(const std::vector<Token> &tokens, size_t i,
                            const LexiconSet &lex) {
  std::string digits;
  for (char c : tokens[i].text) {
    if (c != ',') digits += c;
  }
  auto value = ParseDecimal(digits);
  if (!value) return std::nullopt;
  Run run;
  run.value = *value;
  run.begin = i;
  run.end = i + 1;
  run.positions.push_back(i);
  size_t j = i + 1;
  if (j < tokens.size() && tokens[j].glued && tokens[j].IsWord()) {
    if (auto mult = lex.MagnitudeSuffix(tokens[j].lower)) {
      run.value *= *mult;
      run.scale *= *mult;
      ++j;
    } else if (text::IsOrdinalSuffix(tokens[j].lower)) {
      run.ordinal = true;
      ++j;
    }
  }
  while (j < tokens.size() && IsScaleWord(tokens[j], lex)) {
    run.value *= *lex.NumberWord(tokens[j].lower);
    run.scale *= *lex.NumberWord(tokens[j].lower);
    run.positions.push_back(j);
    ++j;
  }
  run.end = j;
  return run;
}

std::optional<Run> WrittenRun(const std::vector<Token> &tokens, size_t i,
                              const LexiconSet &lex) {
  std::vector<std::pair<std::string, Rational>> words;
  Run run;
  run.begin = i;
  size_t j = i;
  // "a hundred", "a dozen", "a half"
  if (tokens[j].is("a") && j + 1 < tokens.size() &&
      (IsScaleWord(tokens[j + 1], lex) || IsRatioWord(tokens[j + 1], lex))) {
    if (IsRatioWord(tokens[j + 1], lex)) {
      run.value = *lex.RatioWord(tokens[j + 1].lower);
      run.ratio = true;
      run.positions.push_back(j + 1);
      run.end = j + 2;
      return run;
    }
    words.emplace_back("one", 1);
    ++j;
  }
  while (j < tokens.size()) {
    const Token &t = tokens[j];
    if (IsNumberWord(t, lex)) {
      words.emplace_back(t.lower, *lex.NumberWord(t.lower));
      run.positions.push_back(j);
      ++j;
      continue;
    }
    if (!words.empty() && j + 1 < tokens.size() &&
        IsNumberWord(tokens[j + 1], lex)) {
      Rational next = *lex.NumberWord(tokens[j + 1].lower);
      if (t.is("and") && words.back().second >= 100 && next < 100) {
        ++j;
        continue;
      }
      if (t.is("-") && t.glued && tokens[j + 1].glued) {
        ++j;
        continue;
      }
    }
    break;
  }
  if (words.empty()) {
    if (IsRatioWord(tokens[i], lex)) {
      run.value = *lex.RatioWord(tokens[i].lower);
      run.ratio = true;
      run.positions.push_back(i);
      run.end = i + 1;
      return run;
    }
    return std::nullopt;
  }
  auto value = ComposeWritten(words);
  if (!value) return std::nullopt;
  run.value = *value;
  if (words.size() > 1 && IsScaleWord(tokens[run.positions.back()], lex)) {
    run.scale = words.back().second;
  }
  if (j < tokens.size() && IsRatioWord(tokens[j], lex)) {
    run.value *= *lex.RatioWord(tokens[j].lower);
    run.ratio = true;
    run.positions.push_back(j);
    ++j;
  }
  run.end = j;
  return run;
}

// Whether token i can start a numeric run.
bool IsCore(const std::vector<Token> &tokens, size_t i, const LexiconSet &lex,
            const std::vector<bool> *temporal) {
  if (i >= tokens.size()) return false;
  if (temporal && (*temporal)[i]) return false;
  const Token &t = tokens[i];
  if (t.kind == TokenKind::kNumber) return true;
  if (!t.IsWord()) return false;
  const std::string prev = i > 0 ? tokens[i - 1].lower : "";
  if (IsNumberWord(t, lex)) {
    if (t.is("one") && (prev == "no" || prev == "any" || prev == "every" ||
                        prev == "the" || prev == "this" || prev == "that")) {
      return false;
    }
    // Scale words on their own ("hundreds", "million" after "a") are not
    // cardinals unless introduced by "a".
    return true;
  }
  if (IsRatioWord(t, lex)) {
    if (text::IsOrdinalWord(prev) || prev == "the" || prev == "this") {
      return false;
    }
    if (i + 1 < tokens.size() && tokens[i + 1].is("-") && tokens[i + 1].glued) {
      return false;
    }
    return true;
  }
  if (t.is("a") && i + 1 < tokens.size() &&
      (IsScaleWord(tokens[i + 1], lex) || IsRatioWord(tokens[i + 1], lex))) {
    return !(temporal && (*temporal)[i + 1]);
  }
  return false;
}

std::optional<Run> RunAt(const std::vector<Token> &tokens, size_t i,
                         const LexiconSet &lex) {
  if (tokens[i].kind == TokenKind::kNumber) return DigitRun(tokens, i, lex);
  return WrittenRun(tokens, i, lex);
}

struct NumericMatch {
  NormalizedNumber number;
  size_t begin = 0;  // first token of the numeric phrase (incl. prefixes)
  size_t end = 0;    // one past its last token
  std::vector<size_t> positions;
};

bool FluxBefore(const std::vector<Token> &tokens, size_t pos,
                const LexiconSet &lex) {
  for (size_t k = pos; k > 0 && pos - k < 3; --k) {
    if (lex.FluxWord(tokens[k - 1].lower)) return true;
  }
  return false;
}

// Matches the quantity phrase whose first cardinal is at `core`. Prefixes
// (approximator, bound, "between"/"from", currency) are not taken from
// before `floor`.
std::optional<NumericMatch> MatchNumeric(const std::vector<Token> &tokens,
                                         size_t core, size_t floor,
                                         const LexiconSet &lex,
                                         const std::vector<bool> *temporal) {
  auto run1 = RunAt(tokens, core, lex);
  if (!run1) return std::nullopt;
  NumericMatch m;
  m.positions = run1->positions;
  NormalizedNumber &num = m.number;
  num.ratio = run1->ratio;
  num.ordinal = run1->ordinal;

  // Left prefixes.
  size_t begin = core;
  if (begin > floor && tokens[begin - 1].kind == TokenKind::kCurrency) --begin;
  bool between = false, from = false;
  if (begin > floor && tokens[begin - 1].is("between")) {
    between = true;
    --begin;
  } else if (begin > floor && tokens[begin - 1].is("from") &&
             !FluxBefore(tokens, begin - 1, lex)) {
    from = true;
    --begin;
  }
  for (int pass = 0; pass < 2; ++pass) {
    if (size_t a = ApproximatorEndingAt(tokens, begin, floor, lex)) {
      begin -= a;
    }
    if (!num.bound) {
      if (auto b = BoundEndingAt(tokens, begin, floor)) {
        num.bound = b->first;
        begin -= b->second;
      }
    }
  }

  // Right side.
  size_t end = run1->end;
  if (end < tokens.size() && tokens[end].kind == TokenKind::kCurrency &&
      tokens[end].glued) {
    ++end;
  }
  size_t plen = 0;
  if (IsPercentWord(tokens, end, &plen)) {
    num.percent = true;
    end += plen;
  }

  Interval value = Interval::Point(run1->value);
  if (end < tokens.size()) {
    const Token &conn = tokens[end];
    size_t k2 = end + 1;
    if (k2 < tokens.size() && tokens[k2].kind == TokenKind::kCurrency) ++k2;
    const bool next_core = IsCore(tokens, k2, lex, temporal);
    bool take = false, ratio = false;
    if (next_core) {
      if (conn.is("and")) take = between;
      else if (conn.is("to")) take = !between && !FluxBefore(tokens, begin, lex);
      else if (conn.is("-")) take = conn.glued && tokens[k2].glued && !from;
      else if (conn.is("or")) take = !between && !from;
      else if (conn.is("in")) ratio = !between && !from && !num.percent;
    }
    // "12% to $4.5bn" pairs two different quantities.
    const bool cur1 = core > 0 && tokens[core - 1].kind == TokenKind::kCurrency;
    const bool cur2 = k2 != end + 1;
    if (cur2 && !cur1) take = false;
    if (take || ratio) {
      auto run2 = RunAt(tokens, k2, lex);
      if (run2 && ratio) {
        if (IsInteger(run1->value) && IsInteger(run2->value) &&
            run2->value > 0 && run1->value <= run2->value) {
          value = Interval::Point(run1->value / run2->value);
          num.ratio = true;
          end = run2->end;
          m.positions.insert(m.positions.end(), run2->positions.begin(),
                             run2->positions.end());
        }
      } else if (run2) {
        Rational v1 = run1->value;
        if (run1->scale == 1 && run2->scale > 1 &&
            v1 * run2->scale <= run2->value) {
          v1 *= run2->scale;
        }
        Rational lo = std::min(v1, run2->value);
        Rational hi = std::max(v1, run2->value);
        value = Interval::Closed(lo, hi);
        num.range = true;
        end = run2->end;
        m.positions.insert(m.positions.end(), run2->positions.begin(),
                           run2->positions.end());
        if (end < tokens.size() && tokens[end].kind == TokenKind::kCurrency &&
            tokens[end].glued) {
          ++end;
        }
        if (IsPercentWord(tokens, end, &plen)) {
          num.percent = true;
          end += plen;
        }
      }
    }
  }
  if (num.bound) {
    switch (*num.bound) {
      case BoundMarker::kLessThan:
        value = Interval::Below(*value.hi(), true);
        break;
      case BoundMarker::kAtMost:
        value = Interval::Below(*value.hi(), false);
        break;
      case BoundMarker::kMoreThan:
        value = Interval::Above(*value.lo(), true);
        break;
      case BoundMarker::kAtLeast:
        value = Interval::Above(*value.lo(), false);
        break;
      case BoundMarker::kExact:
        break;
    }
  }
  num.value = value;
  m.begin = begin;
  m.end = end;
  return m;
}

// Extends a mention over its head noun phrase: up to three open-class
// words, stopping after a known unit or a plural-looking noun.
size_t ExtendNounPhrase(const std::vector<Token> &tokens, size_t start,
                        const LexiconSet &lex) {
  size_t j = start;
  int taken = 0;
  if (j + 1 < tokens.size() && text::IsIncrementWord(tokens[j].lower) &&
      text::IsContentWord(tokens[j + 1], lex)) {
    ++j;
  }
  while (j < tokens.size() && taken < 3) {
    const Token &t = tokens[j];
    // Hyphenated compound glued to the previous token ("two-year").
    if (t.is("-") && t.glued && j + 1 < tokens.size() && tokens[j + 1].glued &&
        tokens[j + 1].IsWord()) {
      j += 2;
      ++taken;
      continue;
    }
    if (t.kind == TokenKind::kNumber) break;
    if (!text::IsContentWord(t, lex)) break;
    ++j;
    ++taken;
    const std::string &w = t.lower;
    const bool plural = w.size() > 2 && w.back() == 's' &&
                        w[w.size() - 2] != 's' && w != "'s";
    if (lex.IsKnownUnit(w) || plural) break;
    // The next token ends the phrase unless it is another content word.
    if (j < tokens.size() && tokens[j].is("'s")) break;
  }
  return j;
}

}  // namespace

const char *BoundMarkerName(BoundMarker b) {
  switch (b) {
    case BoundMarker::kLessThan: return "less_than";
    case BoundMarker::kMoreThan: return "more_than";
    case BoundMarker::kAtLeast: return "at_least";
    case BoundMarker::kAtMost: return "at_most";
    case BoundMarker::kExact: return "exact";
  }
  return "?";
}

std::vector<bool> TemporalMask(const std::vector<Token> &tokens) {
  const size_t n = tokens.size();
  std::vector<bool> mask(n, false);
  auto integer_value = [&](size_t i) -> long long {
    const std::string &s = tokens[i].text;
    if (s.empty() || s.size() > 6) return -1;
    for (char c : s) {
      if (c < '0' || c > '9') return -1;
    }
    return std::stoll(s);
  };
  for (size_t i = 0; i < n; ++i) {
    if (tokens[i].kind != TokenKind::kNumber) continue;
    const long long v = integer_value(i);
    const Token *prev = i > 0 ? &tokens[i - 1] : nullptr;
    const Token *next = i + 1 < n ? &tokens[i + 1] : nullptr;

    // Clock times: 10:30, 5 pm, 5 p.m., 5 o'clock.
    if (next && next->text == ":" && next->glued && i + 2 < n &&
        tokens[i + 2].kind == TokenKind::kNumber && tokens[i + 2].glued) {
      mask[i] = mask[i + 1] = mask[i + 2] = true;
      continue;
    }
    if (next && (next->is("am") || next->is("pm") || next->is("a.m.") ||
                 next->is("p.m.") || next->is("o'clock"))) {
      mask[i] = true;
      continue;
    }
    // Month-day dates.
    if (v >= 1 && v <= 31) {
      if (prev && text::IsMonth(prev->lower)) {
        mask[i] = true;
        continue;
      }
      size_t k = i + 1;
      if (k < n && tokens[k].glued && text::IsOrdinalSuffix(tokens[k].lower)) {
        ++k;
      }
      if (k < n && tokens[k].is("of")) ++k;
      if (k < n && text::IsMonth(tokens[k].lower) &&
          !tokens[k].is("may")) {
        mask[i] = true;
        continue;
      }
    }
    // Years and decades.
    if (tokens[i].text.size() == 4 && v >= 1900 && v <= 2099) {
      if (prev && prev->kind == TokenKind::kCurrency) continue;
      if (next && next->kind == TokenKind::kPercent) continue;
      bool temporal = false;
      if (next && next->glued && next->is("s")) {
        temporal = true;
        mask[i + 1] = true;
      } else if (prev && (text::IsMonth(prev->lower) || prev->is("the") ||
                          prev->is("'s") || prev->is("its") ||
                          prev->is("their"))) {
        temporal = true;
      } else if (!next || next->kind == TokenKind::kPunct ||
                 (next->IsWord() && (text::IsFunctionWord(next->lower) ||
                                     text::IsAuxiliary(next->lower)))) {
        temporal = true;
      }
      if (temporal) {
        mask[i] = true;
        // Season spans such as 2015-16 or 2015-2016.
        if (next && next->is("-") && i + 2 < n &&
            tokens[i + 2].kind == TokenKind::kNumber) {
          mask[i + 1] = mask[i + 2] = true;
        }
      }
    }
  }
  return mask;
}

std::optional<NormalizedNumber> NormalizeNumberDetailed(
    const std::vector<Token> &tokens, const LexiconSet &lex) {
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!IsCore(tokens, i, lex, nullptr)) continue;
    auto m = MatchNumeric(tokens, i, 0, lex, nullptr);
    if (m) return m->number;
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Interval> NormalizeNumber(const std::vector<Token> &tokens,
                                        const LexiconSet &lex) {
  auto n = NormalizeNumberDetailed(tokens, lex);
  if (!n) return std::nullopt;
  return n->value;
}

std::optional<Interval> NormalizeNumber(std::string_view text,
                                        const LexiconSet &lex) {
  return NormalizeNumber(Tokenize(text), lex);
}

std::vector<QuantityMention> Segment(const std::vector<Token> &tokens,
                                     std::string_view sentence,
                                     const LexiconSet &lex,
                                     std::vector<std::string> *diagnostics) {
  std::vector<QuantityMention> mentions;
  const std::vector<bool> temporal = TemporalMask(tokens);
  size_t floor = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i < floor || !IsCore(tokens, i, lex, &temporal)) continue;
    auto m = MatchNumeric(tokens, i, floor, lex, &temporal);
    if (!m) {
      if (diagnostics) {
        diagnostics->push_back("unparseable number: " + tokens[i].text);
      }
      continue;
    }
    QuantityMention q;
    q.token_begin = m->begin;
    q.token_end = ExtendNounPhrase(tokens, m->end, lex);
    q.tokens.assign(tokens.begin() + q.token_begin,
                    tokens.begin() + q.token_end);
    q.cardinal_positions = m->positions;
    q.raw_value = m->number.value;
    q.bound_marker = m->number.bound;
    q.range_marker = m->number.range;
    q.percent = m->number.percent;
    q.ratio = m->number.ratio;
    q.ordinal = m->number.ordinal;
    const size_t cb = tokens[q.token_begin].begin;
    const size_t ce = tokens[q.token_end - 1].end;
    q.span = Span{cb, ce, std::string(sentence.substr(cb, ce - cb))};
    floor = q.token_end;
    i = floor - 1;
    mentions.push_back(std::move(q));
  }
  return mentions;
}

std::vector<QuantityMention> Segment(std::string_view sentence,
                                     const LexiconSet &lex) {
  return Segment(Tokenize(sentence), sentence, lex);
}

}  // namespace quantnli
