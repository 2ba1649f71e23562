#include "quantnli/lexicon.h"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quantnli {

// Generated from data/lexicon at configure time.
const std::map<std::string, std::string> &EmbeddedLexiconFiles();

namespace {

const std::set<std::string> kEmpty;

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Non-empty, non-comment lines.
std::vector<std::string> Lines(const std::string &content) {
  std::vector<std::string> out;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

std::pair<std::string, std::string> SplitTab(const std::string &line) {
  size_t tab = line.find('\t');
  if (tab == std::string::npos) {
    throw std::runtime_error("lexicon line lacks a tab: " + line);
  }
  return {ToLower(Trim(line.substr(0, tab))), Trim(line.substr(tab + 1))};
}

std::vector<std::string> Words(const std::string &phrase) {
  std::vector<std::string> out;
  std::istringstream in(phrase);
  std::string w;
  while (in >> w) out.push_back(ToLower(w));
  return out;
}

Rational ParseValue(const std::string &text) {
  auto v = ParseDecimal(text);
  if (!v) throw std::runtime_error("bad lexicon value: " + text);
  return *v;
}

const std::string *Find(const std::map<std::string, std::string> &files,
                        const char *name) {
  auto it = files.find(name);
  return it == files.end() ? nullptr : &it->second;
}

const std::map<std::string, std::string, std::less<>> kIrregular = {
    {"people", "person"},   {"men", "man"},         {"women", "woman"},
    {"children", "child"},  {"feet", "foot"},       {"teeth", "tooth"},
    {"mice", "mouse"},      {"geese", "goose"},     {"lives", "life"},
    {"wives", "wife"},      {"knives", "knife"},    {"leaves", "leaf"},
    {"halves", "half"},     {"shelves", "shelf"},   {"thieves", "thief"},
    {"tomatoes", "tomato"}, {"potatoes", "potato"}, {"heroes", "hero"},
    {"series", "series"},   {"species", "species"}, {"news", "news"},
    {"dice", "die"},        {"oxen", "ox"},
};

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Singularize(std::string_view word) {
  std::string w = ToLower(word);
  if (auto it = kIrregular.find(w); it != kIrregular.end()) return it->second;
  auto ends = [&](std::string_view suffix) {
    return w.size() > suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends("men") && w.size() > 4) return w.substr(0, w.size() - 3) + "man";
  if (ends("ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view s : {"sses", "xes", "ches", "shes", "zes"}) {
    if (ends(s)) return w.substr(0, w.size() - 2);
  }
  if (ends("ss") || ends("us") || ends("sis") || ends("xis")) return w;
  if (w == "this" || w == "his") return w;
  if (ends("s") && w.size() > 2) return w.substr(0, w.size() - 1);
  return w;
}

const LexiconSet &LexiconSet::Default() {
  static const LexiconSet *lex =
      new LexiconSet(FromContents(EmbeddedLexiconFiles()));
  return *lex;
}

LexiconSet LexiconSet::LoadDirectory(const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("lexicon directory not found: " + dir);
  }
  std::map<std::string, std::string> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    files[entry.path().filename().string()] = buf.str();
  }
  return FromContents(files);
}

LexiconSet LexiconSet::FromContents(
    const std::map<std::string, std::string> &files) {
  LexiconSet lex;
  if (auto *c = Find(files, "approximators.txt")) {
    for (const auto &line : Lines(*c)) lex.approximators_.push_back(Words(line));
  }
  if (auto *c = Find(files, "flux_words.tsv")) {
    for (const auto &line : Lines(*c)) {
      auto [k, v] = SplitTab(line);
      lex.flux_words_[k] = ToLower(v) == "decrease" ? FluxDirection::kDecrease
                                                    : FluxDirection::kIncrease;
    }
  }
  if (auto *c = Find(files, "freq_markers.txt")) {
    for (const auto &line : Lines(*c)) lex.freq_markers_.insert(ToLower(line));
  }
  if (auto *c = Find(files, "time_units.txt")) {
    for (const auto &line : Lines(*c)) lex.time_units_.insert(ToLower(line));
  }
  if (auto *c = Find(files, "units.txt")) {
    for (const auto &line : Lines(*c)) {
      auto words = Words(line);
      if (words.size() > 1) {
        lex.multiword_units_.push_back(words);
        lex.known_units_.insert(ToLower(line));
      } else {
        lex.known_units_.insert(Singularize(words[0]));
      }
    }
  }
  if (auto *c = Find(files, "unit_synonyms.tsv")) {
    for (const auto &line : Lines(*c)) {
      auto [k, v] = SplitTab(line);
      lex.AddSynonym(k, ToLower(v));
    }
  }
  if (auto *c = Find(files, "person_types.txt")) {
    for (const auto &line : Lines(*c)) {
      lex.person_types_.insert(Singularize(line));
    }
  }
  if (auto *c = Find(files, "number_words.tsv")) {
    for (const auto &line : Lines(*c)) {
      auto [k, v] = SplitTab(line);
      lex.number_words_[k] = ParseValue(v);
    }
  }
  if (auto *c = Find(files, "ratio_words.tsv")) {
    for (const auto &line : Lines(*c)) {
      auto [k, v] = SplitTab(line);
      lex.ratio_words_[k] = ParseValue(v);
    }
  }
  if (auto *c = Find(files, "magnitude_suffixes.tsv")) {
    for (const auto &line : Lines(*c)) {
      auto [k, v] = SplitTab(line);
      lex.magnitude_suffixes_[k] = ParseValue(v);
    }
  }
  if (auto *c = Find(files, "antonyms.tsv")) {
    for (const auto &line : Lines(*c)) {
      auto [k, v] = SplitTab(line);
      std::string b = ToLower(v);
      lex.antonyms_.insert({k, b});
      lex.antonyms_.insert({b, k});
    }
  }
  return lex;
}

std::optional<FluxDirection> LexiconSet::FluxWord(std::string_view token) const {
  auto it = flux_words_.find(ToLower(token));
  if (it == flux_words_.end()) return std::nullopt;
  return it->second;
}

bool LexiconSet::IsFreqMarker(std::string_view token) const {
  return freq_markers_.contains(ToLower(token));
}

bool LexiconSet::IsTimeUnit(std::string_view token) const {
  return time_units_.contains(Singularize(token));
}

bool LexiconSet::IsKnownUnit(std::string_view token) const {
  std::string t = ToLower(token);
  return known_units_.contains(t) || known_units_.contains(Singularize(t));
}

bool LexiconSet::IsPersonType(std::string_view token) const {
  return person_types_.contains(Singularize(token));
}

std::optional<Rational> LexiconSet::NumberWord(std::string_view token) const {
  auto it = number_words_.find(ToLower(token));
  if (it == number_words_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> LexiconSet::RatioWord(std::string_view token) const {
  auto it = ratio_words_.find(ToLower(token));
  if (it == ratio_words_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> LexiconSet::MagnitudeSuffix(
    std::string_view suffix) const {
  auto it = magnitude_suffixes_.find(ToLower(suffix));
  if (it == magnitude_suffixes_.end()) return std::nullopt;
  return it->second;
}

bool LexiconSet::AreAntonyms(std::string_view a, std::string_view b) const {
  return antonyms_.contains({ToLower(a), ToLower(b)});
}

bool LexiconSet::AreSynonyms(std::string_view a, std::string_view b) const {
  const auto &sa = Synonyms(a);
  return sa.contains(std::string(b));
}

const std::set<std::string> &LexiconSet::Synonyms(std::string_view unit) const {
  auto it = unit_synonyms_.find(unit);
  return it == unit_synonyms_.end() ? kEmpty : it->second;
}

void LexiconSet::AddSynonym(const std::string &a, const std::string &b) {
  if (a == b) return;
  unit_synonyms_[a].insert(b);
  unit_synonyms_[b].insert(a);
}

}  // namespace quantnli
