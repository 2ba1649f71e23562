#ifndef QUANTNLI_TESTS_PARSER_GOLDEN_H_
#define QUANTNLI_TESTS_PARSER_GOLDEN_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quantnli/lexicon.h"

namespace oracle {

struct GoldenCase {
  std::string phenomenon;
  std::string sentence;
  nlohmann::json expect;  // the whole record; absent keys are not checked
};

std::vector<GoldenCase> LoadGolden(const std::string &path);

// Parses the sentence and compares the selected NumSet with the record.
// Returns the mismatches, empty when the case passes.
std::vector<std::string> CheckGolden(const GoldenCase &c,
                                     const quantnli::LexiconSet &lex);

}  // namespace oracle

#endif  // QUANTNLI_TESTS_PARSER_GOLDEN_H_
