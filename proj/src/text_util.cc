#include "text_util.h"

#include <map>
#include <set>

namespace quantnli::text {

namespace {

using WordSet = std::set<std::string, std::less<>>;

const WordSet kFunctionWords = {
    "a", "an", "the", "this", "that", "these", "those", "of", "in", "on",
    "at", "to", "for", "from", "by", "with", "without", "and", "or", "but",
    "nor", "as", "than", "then", "so", "not", "no", "if", "because", "while",
    "although", "though", "it", "its", "he", "she", "they", "we", "i", "you",
    "his", "her", "their", "our", "my", "your", "him", "them", "us", "me",
    "there", "here", "each", "every", "per", "some", "any", "all", "both",
    "either", "neither", "about", "over", "under", "more", "less", "fewer",
    "least", "most", "up", "down", "into", "onto", "out", "off", "which",
    "who", "whom", "whose", "what", "when", "where", "why", "how", "only",
    "also", "just", "very", "too", "even", "still", "yet", "already", "such",
    "other", "another", "same", "between", "among", "after", "before",
    "during", "since", "until", "till", "through", "against", "around",
    "near", "upto", "within", "across", "along", "toward", "towards", "via",
    "around", "'s", "s", "much", "many", "few", "several", "own", "else",
    "now", "ago", "again", "once", "twice", "nearly", "almost", "roughly",
    "approximately", "exactly", "precisely", "top", "above", "below",
    "beyond", "whether", "whom", "itself", "themselves", "himself",
    "herself", "left", "total", "altogether",
};

const WordSet kAuxiliaries = {
    "is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
    "had", "having", "do", "does", "did", "will", "would", "can", "could",
    "should", "shall", "may", "might", "must", "'re", "'ll", "'ve",
};

const WordSet kCommonVerbs = {
    "says", "said", "say", "get", "gets", "got", "make", "makes", "made",
    "take", "takes", "took", "taken", "give", "gives", "gave", "given", "go",
    "goes", "went", "gone", "come", "comes", "came", "see", "sees", "saw",
    "seen", "know", "knows", "knew", "think", "thinks", "thought", "want",
    "wants", "need", "needs", "find", "finds", "found", "tell", "tells",
    "told", "ask", "asks", "seem", "seems", "feel", "feels", "felt", "try",
    "tries", "leave", "leaves", "call", "calls", "earn", "earns", "show",
    "shows", "shown", "hold", "holds", "held", "kill", "kills", "die",
    "dies", "buy", "buys", "bought", "sell", "sells", "sold", "spend",
    "spends", "spent", "pay", "pays", "paid", "eat", "eats", "ate", "put",
    "puts", "keep", "keeps", "kept", "bring", "brings", "brought", "win",
    "wins", "won", "lose", "loses", "lost", "grow", "grows", "grew", "rise",
    "rises", "rose", "fall", "falls", "fell", "hit", "cost",
    "costs", "ran", "read", "reads", "sit", "sat", "stand",
    "stood", "become", "becomes", "became", "begin",
    "began", "begun", "build", "builds", "built", "send", "sends", "sent",
    "meet", "meets", "met", "employs", "employ", "contains", "contain",
    "owns", "include", "includes", "remain", "remains", 
    "read", "wrote", "write", "writes",
    "fly", "flew", "drive", "drove", "ride", "rode", "swim", "swam",
    "serve", "serves", "cut", "stay", "stays", 
};

const WordSet kMonths = {
    "january", "february", "march", "april", "may", "june", "july",
    "august", "september", "october", "november", "december", "jan",
    "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov",
    "dec",
};

const WordSet kOrdinalWords = {
    "first", "second", "third", "fourth", "fifth", "sixth", "seventh",
    "eighth", "ninth", "tenth", "last", "next",
};

const WordSet kAnaphoric = {"ones", "one", "them", "others", "more",
                            "each", "those", "these", "it", "all"};

// -ed/-ing words that are usually nouns or adjectives.
const WordSet kNotVerbs = {
    "hundred", "red", "bed", "need", "seed", "speed", "shed", "feed",
    "breed", "steed", "greed", "creed", "deed", "thing", "things", "king",
    "ring", "spring", "string", "wing", "evening", "morning", "building",
    "buildings", "ceiling", "meeting", "meetings", "wedding", "during",
    "nothing", "something", "anything", "everything", "ding", "sibling",
    "siblings", "darling", "pudding", "ceiling", "offspring", "bedding",
    "clothing", "feeling", "earnings", "savings", "filing", "housing",
    "funding", "spending", "ranking", "rating", "ratings", "training",
    "timing", "holding", "holdings", "belongings", "dozen", "bread", "hatred",
    "sacred", "kindred",
};

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

bool IsFunctionWord(std::string_view lower) {
  return kFunctionWords.contains(lower);
}

bool IsAuxiliary(std::string_view lower) { return kAuxiliaries.contains(lower); }

bool IsIncrementWord(std::string_view lower) {
  static const std::set<std::string, std::less<>> kWords = {
      "more", "fewer", "less", "extra", "additional", "other", "further"};
  return kWords.contains(lower);
}

bool IsModal(std::string_view lower) {
  return lower == "will" || lower == "would" || lower == "can" ||
         lower == "could" || lower == "should" || lower == "shall" ||
         lower == "may" || lower == "might" || lower == "must" ||
         lower == "'ll";
}

bool IsMonth(std::string_view lower) { return kMonths.contains(lower); }

bool IsOrdinalSuffix(std::string_view lower) {
  return lower == "st" || lower == "nd" || lower == "rd" || lower == "th";
}

bool IsOrdinalWord(std::string_view lower) {
  return kOrdinalWords.contains(lower);
}

bool IsVerbLike(const Token &t, const LexiconSet &lex) {
  if (!t.IsWord()) return false;
  const std::string &w = t.lower;
  if (kAuxiliaries.contains(w) || kCommonVerbs.contains(w)) return true;
  if (lex.FluxWord(w)) return w != "up" && w != "down";
  if (kNotVerbs.contains(w) || lex.IsKnownUnit(w) || lex.IsPersonType(w)) {
    return false;
  }
  if (w.size() >= 4 && EndsWith(w, "ed")) return true;
  if (w.size() >= 6 && EndsWith(w, "ing")) return true;
  return false;
}

bool IsAdverbLike(const Token &t) {
  return t.IsWord() && t.lower.size() >= 5 && EndsWith(t.lower, "ly") &&
         t.lower != "family" && t.lower != "supply" && t.lower != "ally";
}

bool IsContentWord(const Token &t, const LexiconSet &lex) {
  if (!t.IsWord()) return false;
  const std::string &w = t.lower;
  if (IsFunctionWord(w) || IsAuxiliary(w) || IsMonth(w)) return false;
  if (lex.NumberWord(w) || IsOrdinalWord(w)) return false;
  if (IsVerbLike(t, lex) || IsAdverbLike(t)) return false;
  return true;
}

bool IsAnaphoricUnit(std::string_view lower) {
  return kAnaphoric.contains(lower);
}

std::string VerbStem(std::string_view lower) {
  static const std::map<std::string, std::string, std::less<>> kIrregular = {
      {"has", "have"},   {"had", "have"},    {"have", "have"},
      {"is", "be"},      {"are", "be"},      {"was", "be"},
      {"were", "be"},    {"been", "be"},     {"took", "take"},
      {"taken", "take"}, {"rose", "rise"},   {"risen", "rise"},
      {"fell", "fall"},  {"fallen", "fall"}, {"gave", "give"},
      {"given", "give"}, {"sold", "sell"},   {"bought", "buy"},
      {"spent", "spend"}, {"paid", "pay"},   {"won", "win"},
      {"lost", "lose"},  {"grew", "grow"},   {"made", "make"},
      {"said", "say"},   {"found", "find"},  {"left", "leave"},
      {"ate", "eat"},    {"got", "get"},     {"went", "go"},
      {"came", "come"},  {"saw", "see"},     {"held", "hold"},
      {"kept", "keep"},  {"built", "build"}, {"sent", "send"},
      {"brought", "bring"}, {"wrote", "write"}, {"ran", "run"},
  };
  if (auto it = kIrregular.find(lower); it != kIrregular.end()) {
    return it->second;
  }
  std::string w(lower);
  bool suffix = false;
  if (w.size() > 5 && EndsWith(w, "ing")) {
    w = w.substr(0, w.size() - 3);
    suffix = true;
  } else if (w.size() > 5 && EndsWith(w, "ied")) {
    w = w.substr(0, w.size() - 3) + "y";
  } else if (w.size() > 3 && EndsWith(w, "ed")) {
    w = w.substr(0, w.size() - 2);
    suffix = true;
  } else if (w.size() > 4 && EndsWith(w, "es")) {
    w = w.substr(0, w.size() - 2);
  } else if (w.size() > 3 && EndsWith(w, "s") && !EndsWith(w, "ss")) {
    w = w.substr(0, w.size() - 1);
  }
  // "trapped" -> "trap"
  if (suffix && w.size() > 2 && w.back() == w[w.size() - 2] &&
      w.back() != 'l' && w.back() != 's' && w.back() != 'e') {
    w.pop_back();
  }
  // "vote", "voted" and "votes" share a stem.
  if (w.size() > 3 && w.back() == 'e') w.pop_back();
  return w;
}

bool IsClauseBoundary(const Token &t) {
  if (t.kind != TokenKind::kPunct) return false;
  return t.text == "," || t.text == ";" || t.text == ":" || t.text == "." ||
         t.text == "?" || t.text == "!" || t.text == "(" || t.text == ")";
}

}  // namespace quantnli::text
