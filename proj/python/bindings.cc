#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "quantnli/composer.h"
#include "quantnli/harness.h"
#include "quantnli/interval.h"
#include "quantnli/lexicon.h"
#include "quantnli/number.h"
#include "quantnli/parser.h"
#include "quantnli/pruner.h"
#include "quantnli/reasoner.h"
#include "quantnli/segmenter.h"

namespace py = pybind11;
using namespace quantnli;

namespace {

// Python numbers go through fractions.Fraction so floats and "3/4" strings
// come in exactly.
Rational ToRational(const py::handle &x) {
  py::object frac = py::module_::import("fractions").attr("Fraction")(x);
  const std::string n = py::str(frac.attr("numerator"));
  const std::string d = py::str(frac.attr("denominator"));
  return Rational(boost::multiprecision::cpp_int(n)) /
         Rational(boost::multiprecision::cpp_int(d));
}

py::object ToFraction(const Rational &r) {
  return py::module_::import("fractions").attr("Fraction")(
      boost::multiprecision::numerator(r).str() + "/" +
      boost::multiprecision::denominator(r).str());
}

std::optional<Rational> Endpoint(const py::object &x) {
  if (x.is_none()) return std::nullopt;
  return ToRational(x);
}

struct IntervalErrorPy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Interval Unwrap(const IntervalResult &r) {
  if (const auto *iv = std::get_if<Interval>(&r)) return *iv;
  throw IntervalErrorPy(IntervalErrorName(std::get<IntervalError>(r)));
}

py::object OptSpan(const std::optional<Span> &s) {
  if (!s) return py::none();
  return py::str(s->text);
}

py::list Spans(const std::vector<Span> &spans) {
  py::list out;
  for (const auto &s : spans) out.append(s.text);
  return out;
}

py::dict NumSetDict(const NumSet &n) {
  py::dict d;
  d["text"] = n.mention.text;
  d["begin"] = n.mention.begin;
  d["end"] = n.mention.end;
  d["val"] = n.val;
  d["unit"] = n.unit.text;
  d["ent"] = OptSpan(n.ent);
  d["adj"] = OptSpan(n.adj);
  d["verb"] = OptSpan(n.verb);
  d["loc"] = Spans(n.loc);
  d["freq"] = Spans(n.freq);
  d["flux"] = n.flux ? py::object(py::str(FluxName(*n.flux))) : py::none();
  d["approximate"] = n.approximate;
  d["ratio"] = n.ratio;
  return d;
}

Config ConfigFrom(const std::optional<std::string> &path) {
  return LoadConfig(path.value_or(""));
}

}  // namespace

PYBIND11_MODULE(_quantnli, m) {
  m.doc() = "Quantitative entailment engine";

  static py::exception<IntervalErrorPy> interval_error(m, "IntervalError",
                                                       PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IntervalErrorPy &e) {
      interval_error(e.what());
    }
  });

  py::class_<Interval>(m, "Interval")
      .def(py::init([](const py::object &lo, const py::object &hi, bool lo_open,
                       bool hi_open) {
             auto iv = Interval::Make(Endpoint(lo), lo_open, Endpoint(hi), hi_open);
             if (!iv) throw IntervalErrorPy("empty");
             return *iv;
           }),
           py::arg("lo"), py::arg("hi"), py::arg("lo_open") = false,
           py::arg("hi_open") = false,
           "Interval from two endpoints; None is an infinite end.")
      .def_static("point", [](const py::object &v) { return Interval::Point(ToRational(v)); })
      .def_property_readonly("lo", [](const Interval &i) {
        return i.lo() ? ToFraction(*i.lo()) : py::none();
      })
      .def_property_readonly("hi", [](const Interval &i) {
        return i.hi() ? ToFraction(*i.hi()) : py::none();
      })
      .def_property_readonly("lo_open", &Interval::lo_open)
      .def_property_readonly("hi_open", &Interval::hi_open)
      .def("is_point", &Interval::IsPoint)
      .def("is_bounded", &Interval::IsBounded)
      .def("__contains__", [](const Interval &i, const py::object &x) {
        return i.Contains(ToRational(x));
      })
      .def("issubset", [](const Interval &a, const Interval &b) { return IsSubset(a, b); })
      .def("isdisjoint", [](const Interval &a, const Interval &b) { return Disjoint(a, b); })
      .def("__add__", [](const Interval &a, const Interval &b) { return Unwrap(Add(a, b)); })
      .def("__sub__", [](const Interval &a, const Interval &b) { return Unwrap(Subtract(a, b)); })
      .def("__mul__", [](const Interval &a, const Interval &b) { return Unwrap(Multiply(a, b)); })
      .def("__truediv__", [](const Interval &a, const Interval &b) { return Unwrap(Divide(a, b)); })
      .def("__and__", [](const Interval &a, const Interval &b) { return Unwrap(Intersect(a, b)); })
      .def("__or__", [](const Interval &a, const Interval &b) { return Unwrap(Union(a, b)); })
      .def("setminus", [](const Interval &a, const Interval &b) { return Unwrap(SetMinus(a, b)); })
      .def("__eq__", [](const Interval &a, const Interval &b) { return a == b; })
      .def("__str__", &Interval::ToString)
      .def("__repr__", [](const Interval &i) { return "Interval" + i.ToString(); });

  m.def("normalize_number", [](const std::string &text) -> std::optional<Interval> {
    return NormalizeNumber(text, LexiconSet::Default());
  }, py::arg("text"), "Value of a number expression, or None.");

  m.def("segment", [](const std::string &sentence) {
    py::list out;
    for (const auto &q : Segment(sentence, LexiconSet::Default())) {
      py::dict d;
      d["text"] = q.span.text;
      d["begin"] = q.span.begin;
      d["end"] = q.span.end;
      d["value"] = q.raw_value;
      out.append(d);
    }
    return out;
  }, py::arg("sentence"));

  m.def("parse", [](const std::string &sentence, bool hypothesis) {
    auto ps = ParseSentence(sentence, LexiconSet::Default(),
                            hypothesis ? Source::kHypothesis : Source::kPremise);
    py::list out;
    for (const auto &n : ps.numsets) out.append(NumSetDict(n));
    return out;
  }, py::arg("sentence"), py::arg("hypothesis") = false,
     "Quantity records of one sentence.");

  m.def("classify", [](const std::string &premise, const std::string &hypothesis,
                       int arity, const std::optional<std::string> &config) {
    if (arity != 2 && arity != 3) throw py::value_error("arity must be 2 or 3");
    const Config cfg = ConfigFrom(config);
    const LexiconSet lex = LoadLexicon(cfg);
    SentencePair pair;
    pair.premise = premise;
    pair.hypothesis = hypothesis;
    pair.arity = arity;
    Classification c;
    {
      py::gil_scoped_release nogil;
      c = ClassifyPair(pair, lex, cfg.engine);
    }
    py::dict d;
    d["label"] = LabelName(c.label, arity);
    d["similarity"] = c.similarity;
    py::list prem, hyp, eqs;
    for (const auto &n : c.premise.numsets) prem.append(NumSetDict(n));
    for (const auto &n : c.hypothesis.numsets) hyp.append(NumSetDict(n));
    for (const auto &per_hyp : c.equations) {
      py::list l;
      for (const auto &j : per_hyp) l.append(j.text);
      eqs.append(l);
    }
    py::list verdicts;
    for (const auto &v : c.verdicts) verdicts.append(VerdictStatusName(v.status));
    d["premise"] = prem;
    d["hypothesis"] = hyp;
    d["equations"] = eqs;
    d["verdicts"] = verdicts;
    d["diagnostics"] = c.diagnostics;
    return d;
  }, py::arg("premise"), py::arg("hypothesis"), py::arg("arity") = 3,
     py::arg("config") = py::none());

  m.def("justify", [](const std::string &premise, const std::string &hypothesis,
                      size_t hyp_index, int max_depth, int max_solutions) {
    const LexiconSet &lex = LexiconSet::Default();
    auto p = ParseSentence(premise, lex, Source::kPremise);
    auto h = ParseSentence(hypothesis, lex, Source::kHypothesis);
    if (hyp_index >= h.numsets.size()) throw py::index_error("no such hypothesis quantity");
    auto pairs = CompatiblePairs(p.numsets, h.numsets, lex);
    ComposerOptions opts{max_depth, max_solutions};
    std::vector<std::string> out;
    for (const auto &j : Justify(h.numsets[hyp_index], p.numsets, pairs, hyp_index, lex, opts))
      out.push_back(j.text);
    return out;
  }, py::arg("premise"), py::arg("hypothesis"), py::arg("hyp_index") = 0,
     py::arg("max_depth") = 3, py::arg("max_solutions") = 50,
     "Postfix equations that justify one hypothesis quantity.");

  m.def("evaluate", [](const std::string &dataset, const std::optional<std::string> &config) {
    const Config cfg = ConfigFrom(config);
    auto rd = ResolveDataset(dataset, cfg);
    if (!rd) throw py::value_error("dataset not found: " + dataset);
    std::string text;
    {
      py::gil_scoped_release nogil;
      auto lr = LoadDataset(rd->path, FormatFromPath(rd->path), rd->profile);
      auto report = EvaluateDataset(lr.pairs, rd->profile.name, rd->profile.arity,
                                    LoadLexicon(cfg), cfg);
      report.skipped = lr.skipped;
      text = ReportToJson(report).dump();
    }
    return py::module_::import("json").attr("loads")(text);
  }, py::arg("dataset"), py::arg("config") = py::none(),
     "Evaluation report for a test set name or file.");
}
