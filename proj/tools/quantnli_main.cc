// Command-line front end: eval, classify, perturb, baseline.
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "quantnli/harness.h"
#include "quantnli/reasoner.h"

namespace {

using namespace quantnli;

constexpr int kIoError = 2;

std::string Percent(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << 100.0 * x;
  return os.str();
}

void PrintNumSet(const NumSet &n, const std::string &tag) {
  std::cout << "  " << tag << " \"" << n.mention.text << "\" val=" << n.val.ToString()
            << " unit=" << n.unit_text();
  if (n.ent) std::cout << " ent=" << n.ent->text;
  if (n.adj) std::cout << " adj=" << n.adj->text;
  if (n.verb) std::cout << " verb=" << n.verb->text;
  for (const auto &l : n.loc) std::cout << " loc=" << l.text;
  for (const auto &f : n.freq) std::cout << " freq=\"" << f.text << "\"";
  if (n.flux) std::cout << " flux=" << FluxName(*n.flux);
  if (n.approximate) std::cout << " approx";
  if (n.ratio) std::cout << " ratio";
  std::cout << "\n";
}

// Loads a dataset or reports why it could not.
std::optional<std::pair<ResolvedDataset, LoadResult>> Load(
    const std::string &arg, const Config &cfg) {
  auto ds = ResolveDataset(arg, cfg);
  if (!ds) {
    std::cerr << "dataset not found: " << arg
              << " (pass a file or set QUANTNLI_DATA_DIR)\n";
    return std::nullopt;
  }
  try {
    LoadResult lr = LoadDataset(ds->path, FormatFromPath(ds->path), ds->profile);
    for (const auto &d : lr.diagnostics) std::cerr << ds->path << ": " << d << "\n";
    return std::make_pair(*ds, std::move(lr));
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return std::nullopt;
  }
}

void WriteJsonl(std::ostream &out, const std::vector<SentencePair> &pairs) {
  for (const auto &p : pairs) {
    nlohmann::json j = {{"pairID", p.id},
                        {"sentence1", p.premise},
                        {"sentence2", p.hypothesis},
                        {"gold_label", LabelName(p.gold, p.arity)}};
    out << j.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantitative textual entailment engine"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "Config file (default: $QUANTNLI_CONFIG)");

  std::string dataset, report_path, out_path;
  std::uint64_t seed = 0;
  bool seed_set = false, probe = false;
  std::string premise, hypothesis;
  int arity = 3;

  auto *eval = app.add_subcommand("eval", "Evaluate the engine on a test set");
  eval->add_option("dataset", dataset, "Dataset name or file")->required();
  eval->add_option("--report", report_path, "Write the JSON report here");

  auto *classify = app.add_subcommand("classify", "Classify one pair");
  classify->add_option("--premise", premise)->required();
  classify->add_option("--hypothesis", hypothesis)->required();
  classify->add_option("--arity", arity)->check(CLI::IsMember({2, 3}));

  auto *perturb =
      app.add_subcommand("perturb", "Perturb entailed pairs into contradictions");
  perturb->add_option("dataset", dataset, "Dataset name or file")->required();
  perturb->add_option("--seed", seed, "Random seed")->each([&](const std::string &) {
    seed_set = true;
  });
  perturb->add_option("--out", out_path, "Write perturbed pairs (JSONL) here");
  perturb->add_flag("--probe", probe,
                    "Report the flip rate on the engine's correct entailments");

  auto *baseline = app.add_subcommand("baseline", "Majority-class baseline");
  baseline->add_option("dataset", dataset, "Dataset name or file")->required();

  CLI11_PARSE(app, argc, argv);

  Config cfg;
  LexiconSet lex;
  try {
    cfg = LoadConfig(config_path);
    lex = LoadLexicon(cfg);
  } catch (const std::exception &e) {
    std::cerr << e.what() << "\n";
    return kIoError;
  }
  if (seed_set) cfg.seed = seed;

  if (*classify) {
    SentencePair pair;
    pair.id = "cli";
    pair.premise = premise;
    pair.hypothesis = hypothesis;
    pair.arity = arity;
    Classification c = ClassifyPair(pair, lex, cfg.engine);
    std::cout << LabelName(c.label, arity) << "\n";
    std::cout << "premise quantities:\n";
    for (size_t k = 0; k < c.premise.numsets.size(); ++k) {
      PrintNumSet(c.premise.numsets[k], "P" + std::to_string(k + 1));
    }
    std::cout << "hypothesis quantities:\n";
    for (size_t k = 0; k < c.hypothesis.numsets.size(); ++k) {
      PrintNumSet(c.hypothesis.numsets[k], "H" + std::to_string(k + 1));
    }
    std::cout << "context similarity: " << c.similarity << "\n";
    for (size_t h = 0; h < c.verdicts.size(); ++h) {
      const auto &v = c.verdicts[h];
      std::cout << "H" << h + 1 << ": " << VerdictStatusName(v.status);
      if (v.equation) std::cout << "  [" << v.equation->text << "]";
      std::cout << "\n";
    }
    for (const auto &d : c.diagnostics) std::cout << "note: " << d << "\n";
    return 0;
  }

  auto loaded = Load(dataset, cfg);
  if (!loaded) return kIoError;
  auto &[ds, lr] = *loaded;

  if (*baseline) {
    EvalReport r = MajorityBaseline(lr.pairs, ds.profile.name, ds.profile.arity);
    std::cout << ds.profile.name << " n=" << r.n << " majority="
              << (r.majority_label ? LabelName(*r.majority_label, r.arity) : "-")
              << " accuracy=" << Percent(r.accuracy) << "%\n";
    return 0;
  }

  if (*eval) {
    EvalReport r =
        EvaluateDataset(lr.pairs, ds.profile.name, ds.profile.arity, lex, cfg);
    r.skipped = lr.skipped;
    std::cout << ds.profile.name << " n=" << r.n
              << " accuracy=" << Percent(r.accuracy)
              << "% majority=" << Percent(r.majority_accuracy)
              << "% delta=" << Percent(r.delta) << "\n";
    if (!report_path.empty()) {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write report: " << report_path << "\n";
        return kIoError;
      }
      out << ReportToString(r);
    }
    return 0;
  }

  // perturb
  PerturbStats st;
  auto perturbed = PerturbEntailed(lr.pairs, cfg.seed, &st);
  std::cout << ds.profile.name << " input=" << st.input
            << " entailed=" << st.eligible << " perturbed=" << st.perturbed
            << " skipped=" << st.skipped << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write: " << out_path << "\n";
      return kIoError;
    }
    WriteJsonl(out, perturbed);
  }
  if (probe) {
    ProbeResult pr = PerturbationProbe(lr.pairs, lex, cfg);
    std::cout << "probe: correct_entailed=" << pr.predicted_entailed
              << " perturbed=" << pr.perturbed << " flipped=" << pr.flipped
              << " flip_rate=" << Percent(pr.flip_rate) << "%\n";
  }
  return 0;
}
