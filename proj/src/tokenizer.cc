#include "quantnli/tokenizer.h"

#include <cctype>

#include "quantnli/lexicon.h"

namespace quantnli {

namespace {

// Length of the UTF-8 sequence starting at s[i] (1 for invalid bytes).
size_t CodepointLength(std::string_view s, size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  size_t n = 1;
  if (c >= 0xF0) n = 4;
  else if (c >= 0xE0) n = 3;
  else if (c >= 0xC0) n = 2;
  return i + n <= s.size() ? n : 1;
}

bool IsAsciiAlpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool IsCurrency(std::string_view cp) {
  return cp == "$" || cp == "\xC2\xA3" || cp == "\xE2\x82\xAC" ||
         cp == "\xC2\xA5";
}

// Non-ASCII codepoints that behave as punctuation.
bool IsUnicodePunct(std::string_view cp) {
  return cp == "\xE2\x80\x99" || cp == "\xE2\x80\x98" ||  // ’ ‘
         cp == "\xE2\x80\x9C" || cp == "\xE2\x80\x9D" ||  // “ ”
         cp == "\xE2\x80\x94" || cp == "\xE2\x80\x93" ||  // — –
         cp == "\xE2\x80\xA6" || cp == "\xC2\xA0";        // … nbsp
}

bool IsLetterAt(std::string_view s, size_t i) {
  if (i >= s.size()) return false;
  if (IsAsciiAlpha(s[i])) return true;
  if (static_cast<unsigned char>(s[i]) < 0x80) return false;
  std::string_view cp = s.substr(i, CodepointLength(s, i));
  return !IsCurrency(cp) && !IsUnicodePunct(cp);
}

// Apostrophe (ASCII or typographic) at i; returns its byte length or 0.
size_t ApostropheAt(std::string_view s, size_t i) {
  if (i < s.size() && s[i] == '\'') return 1;
  if (s.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

// "U.S." style abbreviation starting at i: returns the length or 0.
size_t AbbreviationAt(std::string_view s, size_t i) {
  size_t j = i;
  int reps = 0;
  while (j + 1 < s.size() && IsAsciiAlpha(s[j]) && s[j + 1] == '.') {
    j += 2;
    ++reps;
  }
  if (reps < 2 || IsLetterAt(s, j)) return 0;
  return j - i;
}

}  // namespace

bool Token::HasDigit() const {
  for (char c : text) {
    if (IsDigit(c)) return true;
  }
  return false;
}

std::vector<Token> Tokenize(std::string_view s) {
  std::vector<Token> tokens;
  bool glued = false;
  size_t i = 0;
  auto emit = [&](size_t begin, size_t end, TokenKind kind) {
    Token t;
    t.text = std::string(s.substr(begin, end - begin));
    t.lower = ToLower(t.text);
    t.begin = begin;
    t.end = end;
    t.kind = kind;
    t.glued = glued && !tokens.empty();
    tokens.push_back(std::move(t));
    glued = true;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      glued = false;
      continue;
    }
    size_t len = CodepointLength(s, i);
    std::string_view cp = s.substr(i, len);
    if (cp == "\xC2\xA0") {
      i += len;
      glued = false;
      continue;
    }
    if (IsDigit(c)) {
      size_t j = i;
      bool dot = false;
      while (j < s.size()) {
        if (IsDigit(s[j])) {
          ++j;
        } else if ((s[j] == ',' || s[j] == '.') && !dot && j + 1 < s.size() &&
                   IsDigit(s[j + 1])) {
          dot = s[j] == '.';
          j += 2;
        } else {
          break;
        }
      }
      emit(i, j, TokenKind::kNumber);
      i = j;
      continue;
    }
    if (IsCurrency(cp)) {
      emit(i, i + len, TokenKind::kCurrency);
      i += len;
      continue;
    }
    if (c == '%') {
      emit(i, i + 1, TokenKind::kPercent);
      ++i;
      continue;
    }
    if (size_t ap = ApostropheAt(s, i);
        ap && !tokens.empty() && glued && i + ap < s.size() &&
        (s[i + ap] == 's' || s[i + ap] == 'S') && !IsLetterAt(s, i + ap + 1)) {
      emit(i, i + ap + 1, TokenKind::kWord);
      i += ap + 1;
      continue;
    }
    if (IsLetterAt(s, i)) {
      if (size_t ab = AbbreviationAt(s, i)) {
        emit(i, i + ab, TokenKind::kWord);
        i += ab;
        continue;
      }
      size_t j = i;
      while (j < s.size()) {
        if (IsLetterAt(s, j)) {
          j += CodepointLength(s, j);
          continue;
        }
        // Internal apostrophe ("don't"), but not the possessive clitic.
        if (size_t ap = ApostropheAt(s, j); ap && IsLetterAt(s, j + ap)) {
          bool clitic = (s[j + ap] == 's' || s[j + ap] == 'S') &&
                        !IsLetterAt(s, j + ap + 1);
          if (!clitic) {
            j += ap;
            continue;
          }
        }
        break;
      }
      emit(i, j, TokenKind::kWord);
      i = j;
      continue;
    }
    emit(i, i + len, TokenKind::kPunct);
    i += len;
  }
  return tokens;
}

}  // namespace quantnli
