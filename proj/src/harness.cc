#include "quantnli/harness.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "quantnli/segmenter.h"
#include "quantnli/tokenizer.h"

namespace quantnli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::string> FieldAsString(const json &rec,
                                         const std::string &key) {
  auto it = rec.find(key);
  if (it == rec.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  return it->dump();
}

// Label order used for tie-breaking and confusion rows.
const Label kLabelOrder[] = {Label::kEntailment, Label::kContradiction,
                             Label::kNeutral, Label::kNotEntails};

std::string WithGrouping(const std::string &digits) {
  std::string out;
  const size_t n = digits.size();
  for (size_t k = 0; k < n; ++k) {
    if (k > 0 && (n - k) % 3 == 0) out += ',';
    out += digits[k];
  }
  return out;
}

// Text for value `v` in the style of `original` (decimal places, commas).
std::string FormatLike(const Rational &v, const std::string &original) {
  const auto dot = original.find('.');
  const size_t places = dot == std::string::npos ? 0 : original.size() - dot - 1;
  Rational scaled = v;
  for (size_t k = 0; k < places; ++k) scaled *= 10;
  std::string digits =
      boost::multiprecision::numerator(scaled).str();  // integral by construction
  while (digits.size() <= places) digits.insert(digits.begin(), '0');
  std::string int_part = digits.substr(0, digits.size() - places);
  if (original.find(',') != std::string::npos) int_part = WithGrouping(int_part);
  if (places == 0) return int_part;
  return int_part + "." + digits.substr(digits.size() - places);
}

std::optional<Rational> TokenValue(const std::string &text) {
  std::string s;
  for (char c : text) {
    if (c != ',') s += c;
  }
  return ParseDecimal(s);
}

}  // namespace

const std::vector<DatasetProfile> &BuiltinProfiles() {
  static const std::vector<DatasetProfile> kProfiles = [] {
    std::vector<DatasetProfile> v;
    auto add = [&](std::string name, std::vector<std::string> patterns,
                   int arity) {
      DatasetProfile p;
      p.name = std::move(name);
      p.patterns = std::move(patterns);
      p.arity = arity;
      v.push_back(std::move(p));
    };
    add("rte-quant", {"rtequant", "rte"}, 2);
    add("newsnli", {"newsnli", "news"}, 2);
    add("redditnli", {"redditnli", "reddit"}, 3);
    add("stress-test", {"stresstest", "stress"}, 3);
    add("awpnli", {"awpnli", "awp"}, 2);
    return v;
  }();
  return kProfiles;
}

std::optional<DatasetProfile> Config::Profile(const std::string &name) const {
  const std::string key = NormalizeName(name);
  for (const auto &p : datasets) {
    if (NormalizeName(p.name) == key) return p;
  }
  for (const auto &p : datasets) {
    for (const auto &pat : p.patterns) {
      if (key == pat) return p;
    }
  }
  return std::nullopt;
}

Config ConfigFromJson(const json &j) {
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
  Config c;
  static const std::set<std::string> kKeys = {
      "version",   "theta",       "max_depth", "max_solutions",
      "max_premises", "seed",     "lexicon_dir", "data_dir",
      "threads",   "datasets"};
  try {
    for (const auto &[k, v] : j.items()) {
      if (!kKeys.contains(k)) throw std::runtime_error("unknown config key: " + k);
    }
    if (j.contains("theta")) c.engine.theta = j.at("theta").get<double>();
    if (j.contains("max_depth")) {
      c.engine.composer.max_depth = j.at("max_depth").get<int>();
    }
    if (j.contains("max_solutions")) {
      c.engine.composer.max_solutions = j.at("max_solutions").get<int>();
    }
    if (j.contains("max_premises")) {
      c.engine.max_premises = j.at("max_premises").get<size_t>();
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("lexicon_dir") && !j.at("lexicon_dir").is_null()) {
      c.lexicon_dir = j.at("lexicon_dir").get<std::string>();
    }
    if (j.contains("data_dir") && !j.at("data_dir").is_null()) {
      c.data_dir = j.at("data_dir").get<std::string>();
    }
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("datasets")) {
      for (const auto &[name, spec] : j.at("datasets").items()) {
        DatasetProfile p;
        if (auto existing = c.Profile(name)) p = *existing;
        p.name = name;
        if (spec.contains("arity")) p.arity = spec.at("arity").get<int>();
        if (spec.contains("patterns")) {
          p.patterns = spec.at("patterns").get<std::vector<std::string>>();
        }
        if (spec.contains("premise_field")) {
          p.premise_field = spec.at("premise_field").get<std::string>();
        }
        if (spec.contains("hypothesis_field")) {
          p.hypothesis_field = spec.at("hypothesis_field").get<std::string>();
        }
        if (spec.contains("label_field")) {
          p.label_field = spec.at("label_field").get<std::string>();
        }
        if (spec.contains("id_fields")) {
          p.id_fields = spec.at("id_fields").get<std::vector<std::string>>();
        }
        if (p.arity != 2 && p.arity != 3) {
          throw std::runtime_error("dataset " + name + ": arity must be 2 or 3");
        }
        auto it = std::find_if(c.datasets.begin(), c.datasets.end(),
                               [&](const DatasetProfile &d) {
                                 return NormalizeName(d.name) ==
                                        NormalizeName(name);
                               });
        if (it != c.datasets.end()) {
          *it = p;
        } else {
          c.datasets.push_back(p);
        }
      }
    }
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("bad config: ") + e.what());
  }
  if (c.engine.composer.max_depth < 1) {
    throw std::runtime_error("bad config: max_depth must be >= 1");
  }
  return c;
}

Config LoadConfig(const std::string &path) {
  std::string p = path;
  if (p.empty()) {
    if (const char *env = std::getenv("QUANTNLI_CONFIG")) p = env;
  }
  if (p.empty()) return Config{};
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open config: " + p);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw std::runtime_error("bad config " + p + ": " + e.what());
  }
  return ConfigFromJson(j);
}

LexiconSet LoadLexicon(const Config &cfg) {
  if (cfg.lexicon_dir.empty()) return LexiconSet::Default();
  return LexiconSet::LoadDirectory(cfg.lexicon_dir);
}

DatasetFormat FormatFromPath(const std::string &path) {
  std::string ext = fs::path(path).extension().string();
  for (auto &c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".tsv" || ext == ".txt" ? DatasetFormat::kTsv
                                        : DatasetFormat::kJsonl;
}

LoadResult LoadDataset(const std::string &path, DatasetFormat format,
                       const DatasetProfile &profile) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  LoadResult out;
  std::string line;
  size_t line_no = 0;
  std::vector<std::string> header;
  auto add = [&](const std::optional<std::string> &id,
                 const std::optional<std::string> &prem,
                 const std::optional<std::string> &hyp,
                 const std::optional<std::string> &gold) {
    const std::string where = "line " + std::to_string(line_no);
    if (!prem || !hyp || !gold) {
      ++out.skipped;
      out.diagnostics.push_back(where + ": missing field");
      return;
    }
    auto label = ParseLabel(*gold, profile.arity);
    if (!label) {
      ++out.skipped;
      out.diagnostics.push_back(where + ": unknown label \"" + *gold + "\"");
      return;
    }
    SentencePair p;
    p.id = id ? *id : std::to_string(out.pairs.size());
    p.premise = *prem;
    p.hypothesis = *hyp;
    p.gold = *label;
    p.dataset = profile.name;
    p.arity = profile.arity;
    out.pairs.push_back(std::move(p));
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (format == DatasetFormat::kJsonl) {
      json rec;
      try {
        rec = json::parse(line);
      } catch (const json::exception &) {
        ++out.skipped;
        out.diagnostics.push_back("line " + std::to_string(line_no) +
                                  ": malformed JSON");
        continue;
      }
      if (!rec.is_object()) {
        ++out.skipped;
        out.diagnostics.push_back("line " + std::to_string(line_no) +
                                  ": not an object");
        continue;
      }
      std::optional<std::string> id;
      for (const auto &f : profile.id_fields) {
        if ((id = FieldAsString(rec, f))) break;
      }
      add(id, FieldAsString(rec, profile.premise_field),
          FieldAsString(rec, profile.hypothesis_field),
          FieldAsString(rec, profile.label_field));
    } else {
      auto cols = SplitTabs(line);
      if (header.empty()) {
        header = cols;
        continue;
      }
      auto col = [&](const std::string &name) -> std::optional<std::string> {
        for (size_t k = 0; k < header.size(); ++k) {
          if (header[k] == name && k < cols.size()) return cols[k];
        }
        return std::nullopt;
      };
      std::optional<std::string> id;
      for (const auto &f : profile.id_fields) {
        if ((id = col(f))) break;
      }
      add(id, col(profile.premise_field), col(profile.hypothesis_field),
          col(profile.label_field));
    }
  }
  return out;
}

std::string NormalizeName(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::optional<std::string> ResolveDatasetPath(const std::string &name,
                                              const std::string &data_dir,
                                              const DatasetProfile &profile) {
  std::error_code ec;
  if (fs::is_regular_file(name, ec)) return name;
  if (data_dir.empty() || !fs::is_directory(data_dir, ec)) return std::nullopt;
  std::vector<fs::path> files;
  for (const auto &e : fs::recursive_directory_iterator(data_dir, ec)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto &pat : profile.patterns) {
    for (const auto &f : files) {
      const std::string ext = f.extension().string();
      if (ext != ".jsonl" && ext != ".json" && ext != ".tsv") continue;
      if (NormalizeName(f.stem().string()).find(pat) != std::string::npos) {
        return f.string();
      }
    }
  }
  return std::nullopt;
}

std::string DataDir(const Config &cfg) {
  if (!cfg.data_dir.empty()) return cfg.data_dir;
  if (const char *env = std::getenv("QUANTNLI_DATA_DIR")) return env;
  return "";
}

std::optional<ResolvedDataset> ResolveDataset(const std::string &arg,
                                              const Config &cfg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    ResolvedDataset r;
    r.path = arg;
    const std::string stem = NormalizeName(fs::path(arg).stem().string());
    std::optional<DatasetProfile> match = cfg.Profile(stem);
    for (const auto &p : cfg.datasets) {
      if (match) break;
      for (const auto &pat : p.patterns) {
        if (stem.find(pat) != std::string::npos) {
          match = p;
          break;
        }
      }
    }
    if (match) {
      r.profile = *match;
    } else {
      r.profile.name = fs::path(arg).stem().string();
      r.profile.arity = 3;
    }
    return r;
  }
  auto profile = cfg.Profile(arg);
  if (!profile) return std::nullopt;
  auto path = ResolveDatasetPath(arg, DataDir(cfg), *profile);
  if (!path) return std::nullopt;
  return ResolvedDataset{*profile, *path};
}

EvalReport MajorityBaseline(const std::vector<SentencePair> &pairs,
                            const std::string &dataset, int arity) {
  EvalReport r;
  r.dataset = dataset;
  r.arity = arity;
  std::map<Label, size_t> counts;
  for (const auto &p : pairs) ++counts[CollapseLabel(p.gold, arity)];
  std::optional<Label> best;
  for (Label l : kLabelOrder) {
    if (counts[l] > 0 && (!best || counts[l] > counts[*best])) best = l;
  }
  r.majority_label = best;
  for (const auto &p : pairs) {
    PairRecord rec{p.id, CollapseLabel(p.gold, arity), *best};
    r.per_pair.push_back(rec);
  }
  r.n = pairs.size();
  for (const auto &rec : r.per_pair) {
    r.correct += rec.gold == rec.predicted;
    ++r.confusion[LabelName(rec.gold, arity)][LabelName(rec.predicted, arity)];
  }
  r.accuracy = r.n ? static_cast<double>(r.correct) / r.n : 0.0;
  r.majority_accuracy = r.accuracy;
  r.delta = 0;
  return r;
}

EvalReport EvaluateDataset(const std::vector<SentencePair> &pairs,
                           const std::string &dataset, int arity,
                           const LexiconSet &lex, const Config &cfg) {
  std::vector<Label> predicted(pairs.size(), Label::kNeutral);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < pairs.size(); k = next++) {
      SentencePair p = pairs[k];
      p.arity = arity;
      predicted[k] = ClassifyPair(p, lex, cfg.engine).label;
    }
  };
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 64);
  if (threads == 1 || pairs.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }

  EvalReport r;
  r.dataset = dataset;
  r.arity = arity;
  r.n = pairs.size();
  for (size_t k = 0; k < pairs.size(); ++k) {
    PairRecord rec{pairs[k].id, CollapseLabel(pairs[k].gold, arity),
                   predicted[k]};
    r.correct += rec.gold == rec.predicted;
    ++r.confusion[LabelName(rec.gold, arity)][LabelName(rec.predicted, arity)];
    r.per_pair.push_back(std::move(rec));
  }
  r.accuracy = r.n ? static_cast<double>(r.correct) / r.n : 0.0;
  if (r.n) {
    EvalReport maj = MajorityBaseline(pairs, dataset, arity);
    r.majority_accuracy = maj.accuracy;
    r.majority_label = maj.majority_label;
  }
  r.delta = r.accuracy - r.majority_accuracy;
  return r;
}

json ReportToJson(const EvalReport &r) {
  json j;
  j["format"] = "quantnli-eval-report";
  j["version"] = kReportVersion;
  j["dataset"] = r.dataset;
  j["arity"] = r.arity;
  j["n"] = r.n;
  j["correct"] = r.correct;
  j["accuracy"] = r.accuracy;
  j["majority_accuracy"] = r.majority_accuracy;
  j["majority_label"] =
      r.majority_label ? json(LabelName(*r.majority_label, r.arity)) : json();
  j["delta"] = r.delta;
  j["skipped"] = r.skipped;
  j["confusion"] = r.confusion;
  json per = json::array();
  for (const auto &p : r.per_pair) {
    per.push_back({{"id", p.id},
                   {"gold", LabelName(p.gold, r.arity)},
                   {"predicted", LabelName(p.predicted, r.arity)}});
  }
  j["per_pair"] = std::move(per);
  return j;
}

std::string ReportToString(const EvalReport &r) {
  return ReportToJson(r).dump(2) + "\n";
}

std::vector<SentencePair> PerturbEntailed(const std::vector<SentencePair> &pairs,
                                          std::uint64_t seed,
                                          PerturbStats *stats) {
  PerturbStats st;
  st.input = pairs.size();
  std::mt19937_64 rng(seed);
  std::vector<SentencePair> out;
  for (const auto &pair : pairs) {
    if (pair.gold != Label::kEntailment) continue;
    ++st.eligible;
    const auto ptoks = Tokenize(pair.premise);
    const auto htoks = Tokenize(pair.hypothesis);
    const auto pmask = TemporalMask(ptoks);
    const auto hmask = TemporalMask(htoks);
    std::set<std::string> premise_numbers;
    std::set<Rational> premise_values;
    for (size_t k = 0; k < ptoks.size(); ++k) {
      if (ptoks[k].kind != TokenKind::kNumber) continue;
      if (auto v = TokenValue(ptoks[k].text)) premise_values.insert(*v);
      if (!pmask[k]) premise_numbers.insert(ptoks[k].text);
    }
    std::vector<size_t> candidates;
    for (size_t k = 0; k < htoks.size(); ++k) {
      if (htoks[k].kind == TokenKind::kNumber && !hmask[k] &&
          premise_numbers.contains(htoks[k].text)) {
        candidates.push_back(k);
      }
    }
    if (candidates.empty()) {
      ++st.skipped;
      continue;
    }
    const Token &t = htoks[candidates[rng() % candidates.size()]];
    const Rational v = *TokenValue(t.text);
    const auto dot = t.text.find('.');
    Rational step = 1;
    if (dot != std::string::npos) {
      for (size_t k = dot + 1; k < t.text.size(); ++k) step /= 10;
    }
    const bool up_first = rng() % 2 == 0;
    std::optional<Rational> replacement;
    for (int attempt = 0; attempt < 2 && !replacement; ++attempt) {
      const bool up = (attempt == 0) == up_first;
      Rational cand = v;
      if (up) cand += step;
      else cand -= step;
      if (cand < 0 || premise_values.contains(cand)) continue;
      replacement = cand;
    }
    if (!replacement) {
      ++st.skipped;
      continue;
    }
    SentencePair p = pair;
    p.hypothesis = pair.hypothesis.substr(0, t.begin) +
                   FormatLike(*replacement, t.text) +
                   pair.hypothesis.substr(t.end);
    p.gold = CollapseLabel(Label::kContradiction, pair.arity);
    ++st.perturbed;
    out.push_back(std::move(p));
  }
  if (stats) *stats = st;
  return out;
}

ProbeResult PerturbationProbe(const std::vector<SentencePair> &pairs,
                              const LexiconSet &lex, const Config &cfg) {
  ProbeResult res;
  std::vector<SentencePair> entailed;
  for (const auto &p : pairs) {
    if (p.gold != Label::kEntailment) continue;
    if (ClassifyPair(p, lex, cfg.engine).label == Label::kEntailment) {
      entailed.push_back(p);
    }
  }
  res.predicted_entailed = entailed.size();
  const auto perturbed = PerturbEntailed(entailed, cfg.seed);
  res.perturbed = perturbed.size();
  for (const auto &p : perturbed) {
    res.flipped += ClassifyPair(p, lex, cfg.engine).label != Label::kEntailment;
  }
  res.flip_rate = res.perturbed ? static_cast<double>(res.flipped) / res.perturbed
                                : 0.0;
  return res;
}

}  // namespace quantnli
