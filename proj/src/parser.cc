#include "quantnli/parser.h"

#include <algorithm>

#include "text_util.h"

namespace quantnli {

namespace {

Span TokenSpan(const std::vector<Token> &tokens, size_t first, size_t last) {
  Span s;
  s.begin = tokens[first].begin;
  s.end = tokens[last].end;
  for (size_t k = first; k <= last; ++k) {
    if (k > first && !tokens[k].glued) s.text += ' ';
    s.text += tokens[k].lower;
  }
  return s;
}

bool IsSentenceEnd(const Token &t) {
  return t.kind == TokenKind::kPunct &&
         (t.text == "." || t.text == "?" || t.text == "!" || t.text == ";");
}

bool IsDeterminerLike(const Token &t) {
  static const char *kWords[] = {"the", "a", "an", "his", "her", "their",
                                 "its", "our", "my", "your", "these",
                                 "those", "this", "that", "all"};
  for (const char *w : kWords) {
    if (t.is(w)) return true;
  }
  return false;
}

// First token after the numeric core of the mention: skips cardinals, glued
// suffixes ("m", "th"), trailing currency and percent words.
size_t AfterNumeric(const QuantityMention &m, const std::vector<Token> &tokens) {
  size_t s = m.cardinal_positions.back() + 1;
  while (s < m.token_end &&
         (tokens[s].glued &&
          (tokens[s].IsWord() || tokens[s].kind == TokenKind::kCurrency ||
           tokens[s].kind == TokenKind::kPercent))) {
    ++s;
  }
  while (s < m.token_end &&
         (tokens[s].kind == TokenKind::kPercent || tokens[s].is("percent") ||
          tokens[s].is("pct") || tokens[s].is("percentage"))) {
    ++s;
  }
  if (s + 1 < m.token_end && tokens[s].is("per") && tokens[s + 1].is("cent")) {
    s += 2;
  }
  if (s + 1 < m.token_end && text::IsIncrementWord(tokens[s].lower)) ++s;
  return s;
}

// Last content word of a noun phrase starting at `from`, taking at most
// three words.
std::optional<size_t> NounPhraseHead(const std::vector<Token> &tokens,
                                     size_t from, size_t limit,
                                     const LexiconSet &lex) {
  std::optional<size_t> head;
  for (size_t k = from; k < limit && k < from + 3; ++k) {
    if (!text::IsContentWord(tokens[k], lex)) break;
    head = k;
    if (lex.IsKnownUnit(tokens[k].lower)) break;
  }
  return head;
}

// Nearest content word to the mention, not crossing sentence punctuation.
// Ties go to the left.
std::optional<size_t> NearestNoun(const QuantityMention &m,
                                  const std::vector<Token> &tokens,
                                  const LexiconSet &lex) {
  size_t left_limit = 0;
  for (size_t k = m.token_begin; k > 0; --k) {
    if (IsSentenceEnd(tokens[k - 1])) {
      left_limit = k;
      break;
    }
  }
  size_t right_limit = tokens.size();
  for (size_t k = m.token_end; k < tokens.size(); ++k) {
    if (IsSentenceEnd(tokens[k])) {
      right_limit = k;
      break;
    }
  }
  for (size_t d = 1;; ++d) {
    bool any = false;
    if (m.token_begin >= d && m.token_begin - d >= left_limit) {
      any = true;
      size_t k = m.token_begin - d;
      if (text::IsContentWord(tokens[k], lex)) return k;
    }
    if (m.token_end + d - 1 < right_limit) {
      any = true;
      size_t k = m.token_end + d - 1;
      if (text::IsContentWord(tokens[k], lex)) return k;
    }
    if (!any) return std::nullopt;
  }
}

size_t ClauseStart(const std::vector<Token> &tokens, size_t pos) {
  while (pos > 0 && !text::IsClauseBoundary(tokens[pos - 1])) --pos;
  return pos;
}

size_t ClauseEnd(const std::vector<Token> &tokens, size_t pos) {
  while (pos < tokens.size() && !text::IsClauseBoundary(tokens[pos])) ++pos;
  return pos;
}

bool HasApproximator(const std::vector<Token> &tokens, size_t begin,
                     size_t end, const LexiconSet &lex) {
  for (const auto &phrase : lex.approximators()) {
    if (phrase.empty() || phrase.size() > end - begin) continue;
    for (size_t s = begin; s + phrase.size() <= end; ++s) {
      bool match = true;
      for (size_t k = 0; k < phrase.size() && match; ++k) {
        match = tokens[s + k].lower == phrase[k];
      }
      if (match) return true;
    }
  }
  return false;
}

}  // namespace

const char *ParseErrorName(ParseError e) {
  switch (e) {
    case ParseError::kMissingUnit: return "MissingUnit";
    case ParseError::kAlreadyApproximate: return "AlreadyApproximate";
  }
  return "?";
}

Rational ApproximationFraction() { return Rational(1, 50); }

std::optional<ParseError> ApplyApproximation(NumSet &n) {
  if (n.approximate) return ParseError::kAlreadyApproximate;
  n.val = Widen(n.val, ApproximationFraction());
  n.approximate = true;
  return std::nullopt;
}

ParseResult ParseQuantity(const QuantityMention &mention,
                          std::string_view sentence, const LexiconSet &lex,
                          Source source, const NumSet *previous) {
  return ParseQuantity(mention, Tokenize(sentence), sentence, lex, source,
                       previous);
}

ParseResult ParseQuantity(const QuantityMention &m,
                          const std::vector<Token> &tokens,
                          std::string_view /*sentence*/, const LexiconSet &lex,
                          Source source, const NumSet *previous) {
  NumSet n;
  n.val = m.raw_value;
  n.ratio = m.ratio;
  n.source = source;
  n.mention = m.span;
  const size_t b = m.token_begin, e = m.token_end;
  const size_t first_cardinal = m.cardinal_positions.front();

  // Unit.
  std::optional<size_t> unit_pos;
  bool unit_set = false;
  if (m.percent) {
    n.unit = Span{m.span.begin, m.span.end, "%"};
    unit_set = true;
  } else {
    for (size_t k = b; k < e; ++k) {
      if (tokens[k].kind == TokenKind::kCurrency) {
        n.unit = TokenSpan(tokens, k, k);
        unit_set = true;
        break;
      }
    }
  }
  const size_t after = AfterNumeric(m, tokens);
  if (!unit_set) {
    if (after < e && lex.IsKnownUnit(tokens[after].lower)) {
      unit_pos = after;
    } else if (after < e) {
      unit_pos = NounPhraseHead(tokens, after, e, lex);
    }
    if (!unit_pos && e < tokens.size() && after == e && tokens[e].is("of")) {
      // Partitive: "3 of the 10 boys", "half of them".
      size_t k = e + 1;
      while (k < tokens.size() && IsDeterminerLike(tokens[k])) ++k;
      if (k < tokens.size() && tokens[k].IsWord() &&
          text::IsAnaphoricUnit(tokens[k].lower) && previous) {
        n.unit = previous->unit;
        unit_set = true;
      } else if (k < tokens.size()) {
        unit_pos = NounPhraseHead(tokens, k, tokens.size(), lex);
        // Possessor first: "5855 of Farmer Cunningham's lambs".
        while (unit_pos && *unit_pos + 1 < tokens.size() &&
               tokens[*unit_pos + 1].is("'s")) {
          k = *unit_pos + 2;
          while (k < tokens.size() && IsDeterminerLike(tokens[k])) ++k;
          auto next = NounPhraseHead(tokens, k, tokens.size(), lex);
          if (!next) break;
          unit_pos = next;
        }
      }
    }
    if (!unit_pos && !unit_set && after < tokens.size() &&
        tokens[after].IsWord() && text::IsAnaphoricUnit(tokens[after].lower) &&
        previous) {
      n.unit = previous->unit;
      unit_set = true;
    }
    if (unit_pos && previous && text::IsAnaphoricUnit(tokens[*unit_pos].lower)) {
      // "193 white ones"
      n.unit = previous->unit;
      unit_set = true;
    }
    if (!unit_pos && !unit_set) unit_pos = NearestNoun(m, tokens, lex);
    if (!unit_pos && !unit_set) return ParseError::kMissingUnit;
    if (unit_pos && !unit_set) {
      n.unit = TokenSpan(tokens, *unit_pos, *unit_pos);
      unit_set = true;
    }
  }

  // Adjective: open-class word right before the unit, outside the numeric
  // core.
  if (unit_pos && *unit_pos > 0) {
    size_t k = *unit_pos - 1;
    const bool outside_core =
        k > m.cardinal_positions.back() || k < m.token_begin;
    if (outside_core && text::IsContentWord(tokens[k], lex)) {
      n.adj = TokenSpan(tokens, k, k);
    }
  }

  // Entity: "sales of <mention>", "donations worth <mention>".
  if (b >= 2 && (tokens[b - 1].is("of") || tokens[b - 1].is("worth")) &&
      text::IsContentWord(tokens[b - 2], lex)) {
    n.ent = TokenSpan(tokens, b - 2, b - 2);
  }

  // Verb: nearest verb to the left within the clause, else to the right.
  // Modals never fill the slot; an auxiliary followed by another verb
  // yields to it.
  auto verb_at = [&](size_t k) {
    const Token &t = tokens[k];
    if (!text::IsVerbLike(t, lex) || lex.FluxWord(t.lower)) return false;
    if (text::IsModal(t.lower)) return false;
    if (text::IsAuxiliary(t.lower) && k + 1 < tokens.size() &&
        text::IsVerbLike(tokens[k + 1], lex)) {
      return false;
    }
    return true;
  };
  const size_t cs = ClauseStart(tokens, b), ce = ClauseEnd(tokens, e);
  for (size_t k = b; k > cs; --k) {
    if (verb_at(k - 1)) {
      n.verb = TokenSpan(tokens, k - 1, k - 1);
      break;
    }
  }
  if (!n.verb) {
    for (size_t k = e; k < ce; ++k) {
      if (verb_at(k)) {
        n.verb = TokenSpan(tokens, k, k);
        break;
      }
    }
  }
  if (n.verb) n.verb->text = text::VerbStem(n.verb->text);

  // Location: "in/at/on <noun chunk>" after the mention, in the clause.
  for (size_t k = e; k + 1 < ce; ++k) {
    if (!(tokens[k].is("in") || tokens[k].is("at") || tokens[k].is("on"))) {
      continue;
    }
    size_t j = k + 1;
    while (j < ce && IsDeterminerLike(tokens[j])) ++j;
    size_t first = j;
    while (j < ce && text::IsContentWord(tokens[j], lex)) ++j;
    if (j > first) {
      n.loc.push_back(TokenSpan(tokens, first, j - 1));
      break;
    }
  }

  // Frequency: "per hour", "every day", "a year".
  if (e + 1 < tokens.size() && lex.IsFreqMarker(tokens[e].lower) &&
      tokens[e + 1].IsWord()) {
    const bool article = tokens[e].is("a") || tokens[e].is("an");
    if (!article || lex.IsTimeUnit(tokens[e + 1].lower)) {
      n.freq.push_back(TokenSpan(tokens, e, e + 1));
    }
  }

  // Flux: a change word earlier in the clause, direction from to/from.
  if (b > 0 && (tokens[b - 1].is("to") || tokens[b - 1].is("from"))) {
    const bool to = tokens[b - 1].is("to");
    for (size_t k = b - 1; k > cs; --k) {
      if (auto dir = lex.FluxWord(tokens[k - 1].lower)) {
        const bool inc = *dir == FluxDirection::kIncrease;
        n.flux = inc ? (to ? Flux::kIncreaseTo : Flux::kIncreaseFrom)
                     : (to ? Flux::kDecreaseTo : Flux::kDecreaseFrom);
        break;
      }
    }
  }

  if (HasApproximator(tokens, b, first_cardinal, lex)) {
    ApplyApproximation(n);
  }
  return n;
}

ParsedSentence ParseSentence(std::string_view sentence, const LexiconSet &lex,
                             Source source) {
  ParsedSentence out;
  out.tokens = Tokenize(sentence);
  out.mentions = Segment(out.tokens, sentence, lex, &out.diagnostics);
  for (const auto &m : out.mentions) {
    const NumSet *prev = out.numsets.empty() ? nullptr : &out.numsets.back();
    auto r = ParseQuantity(m, out.tokens, sentence, lex, source, prev);
    if (auto *err = std::get_if<ParseError>(&r)) {
      out.diagnostics.push_back(std::string("dropped \"") + m.span.text +
                                "\": " + ParseErrorName(*err));
      continue;
    }
    out.numsets.push_back(std::get<NumSet>(std::move(r)));
  }
  return out;
}

}  // namespace quantnli
