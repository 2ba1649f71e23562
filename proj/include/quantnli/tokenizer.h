#ifndef QUANTNLI_TOKENIZER_H_
#define QUANTNLI_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace quantnli {

enum class TokenKind {
  kWord,      // letters, possibly with internal apostrophes or dots ("U.S.")
  kNumber,    // digits with optional ',' grouping and '.' decimals
  kCurrency,  // $ £ € ¥
  kPercent,   // %
  kPunct,     // any other single symbol, including '-'
};

struct Token {
  std::string text;
  std::string lower;
  size_t begin = 0;  // byte offsets into the sentence
  size_t end = 0;
  TokenKind kind = TokenKind::kWord;
  // No whitespace between this token and the previous one ("374m" yields
  // "374" and a glued "m").
  bool glued = false;

  bool is(std::string_view lowered) const { return lower == lowered; }
  bool IsWord() const { return kind == TokenKind::kWord; }
  bool HasDigit() const;
};

// Whitespace-plus-punctuation tokenizer. Contract:
//   * whitespace separates tokens;
//   * digit runs ("1,000.5") are one token, split from adjacent letters;
//   * currency symbols and '%' are standalone tokens;
//   * every other punctuation character, including '-', is its own token,
//     except dots inside letter abbreviations ("U.S.") and the clitic "'s"
//     which is split from its host ("Cunningham's" -> "Cunningham", "'s").
std::vector<Token> Tokenize(std::string_view sentence);

}  // namespace quantnli

#endif  // QUANTNLI_TOKENIZER_H_
