#ifndef QUANTNLI_COMPOSER_H_
#define QUANTNLI_COMPOSER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantnli/interval.h"
#include "quantnli/lexicon.h"
#include "quantnli/model.h"
#include "quantnli/pruner.h"

namespace quantnli {

// Operators in symbol-list order. The two relations come last so that the
// final position can be restricted to the top two symbol indices.
enum class Op {
  kAdd,
  kSubtract,
  kMultiply,
  kDivide,
  kIntersect,
  kUnion,
  kSetMinus,
  kEqual,
  kSubset,
};
inline constexpr int kNumOps = 9;

const char *OpSymbol(Op op);
bool IsArithmetic(Op op);  // + - * /
bool IsRangeOp(Op op);     // intersect, union, set minus
bool IsRelation(Op op);    // = and subset

// Symbol list for one hypothesis quantity:
//   [0, K)      single-valued premise quantities
//   [K, M-1)    range-valued premise quantities
//   M-1         the hypothesis quantity
//   [M, N)      the nine operators, in Op order
// Each quantity carries a type index; quantities with compatible units
// share one.
struct SymbolList {
  std::vector<NumSet> singles;
  std::vector<NumSet> ranges;
  NumSet hyp;
  std::vector<int> single_types;
  std::vector<int> range_types;
  int hyp_type = 0;
  // Caller's index for each premise symbol, in symbol order; used for
  // naming ("P3").
  std::vector<size_t> premise_ids;

  int K() const { return static_cast<int>(singles.size()); }
  int M() const { return K() + static_cast<int>(ranges.size()) + 1; }
  int N() const { return M() + kNumOps; }

  bool IsOperator(int x) const { return x >= M(); }
  bool IsHyp(int x) const { return x == M() - 1; }
  // Class of a quantity symbol. The hypothesis is single or range by value.
  bool IsSingle(int x) const;
  bool IsRange(int x) const;
  Op OpAt(int x) const { return static_cast<Op>(x - M()); }
  const NumSet &Quantity(int x) const;
  int TypeOf(int x) const;
  std::string Name(int x) const;

  // Splits `premises` by value shape, keeping their relative order.
  // `types` holds one type index per premise.
  static SymbolList Build(const NumSet &hyp, int hyp_type,
                          const std::vector<NumSet> &premises,
                          const std::vector<int> &types,
                          const std::vector<size_t> &ids = {});
};

struct Equation {
  std::vector<int> postfix;  // symbol indices

  size_t length() const { return postfix.size(); }
  friend bool operator==(const Equation &, const Equation &) = default;
  friend auto operator<=>(const Equation &, const Equation &) = default;
};

// Per-position bookkeeping of an equation: class flags and stack depth,
// with d_0 = 0 and d_i = d_{i-1} - 2 o_i + 1.
struct EquationLayout {
  std::vector<bool> single, range, op;
  std::vector<int> depth;
};
EquationLayout Layout(const SymbolList &sl, const Equation &eq);

// Space-separated postfix text, e.g. "P1 P2 - H1 =".
std::string ToPostfixString(const SymbolList &sl, const Equation &eq);

// Height of the expression tree counting the final relation; a bare
// "P1 H1 =" has depth 1.
int TreeDepth(const SymbolList &sl, const Equation &eq);

struct ComposerOptions {
  int max_depth = 3;
  int max_solutions = 50;  // <= 0 means unlimited
};

// All structurally valid equations ordered by length, then
// lexicographically by symbol index, truncated to max_solutions.
std::vector<Equation> EnumerateEquations(const SymbolList &sl,
                                         const ComposerOptions &opts = {});

enum class EvalOutcome { kJustified, kUnjustified, kInvalid };
const char *EvalOutcomeName(EvalOutcome o);

// Stack evaluation with interval operators. Any operator error, or a
// multiplication/division by exactly 1, makes the equation invalid.
EvalOutcome Evaluate(const SymbolList &sl, const Equation &eq);

struct Justification {
  Equation equation;
  std::string text;
};

// Type indices: union-find over unit compatibility among all quantities.
// Returns one index per premise followed by the hypothesis' index.
std::vector<int> TypeClasses(const std::vector<NumSet> &premises,
                             const NumSet &hyp, const LexiconSet &lex);

// Builds the symbol list for hypothesis `h` of `hyps` and returns the
// equations that evaluate to justified. Premises compatible with the
// hypothesis are taken first, then the rest, up to `max_premises`.
std::vector<Justification> Justify(const NumSet &hyp,
                                   const std::vector<NumSet> &premises,
                                   const std::vector<CompatiblePair> &pairs,
                                   size_t hyp_index, const LexiconSet &lex,
                                   const ComposerOptions &opts = {},
                                   size_t max_premises = 6);

}  // namespace quantnli

#endif  // QUANTNLI_COMPOSER_H_
