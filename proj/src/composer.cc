#include "quantnli/composer.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quantnli {

namespace {

using TypeMask = std::uint64_t;

struct Entry {
  bool single = true;
  TypeMask types = 0;
  int height = 0;
};

TypeMask Bit(int t) {
  if (t < 0 || t >= 64) throw std::out_of_range("type index out of range");
  return TypeMask{1} << t;
}

// Feasible result types of `op` applied to (a, b), or 0 when the operand
// types admit none.
TypeMask ResultTypes(Op op, TypeMask a, TypeMask b) {
  switch (op) {
    case Op::kMultiply:
      return a | b;
    case Op::kDivide: {
      // t = t_a with t_a != t_b.
      TypeMask out = 0;
      for (int t = 0; t < 64; ++t) {
        if ((a & Bit(t)) && (b & ~Bit(t))) out |= Bit(t);
      }
      return out;
    }
    default:
      return a & b;
  }
}

// Whether the operand classes satisfy the operator.
bool ClassesOk(Op op, const Entry &a, const Entry &b) {
  if (IsArithmetic(op) || op == Op::kEqual) return a.single && b.single;
  if (IsRangeOp(op)) return !a.single && !b.single;
  return !b.single;  // subset
}

class Enumerator {
 public:
  Enumerator(const SymbolList &sl, const ComposerOptions &opts)
      : sl_(sl), opts_(opts) {}

  std::vector<Equation> Run() {
    const int premises = sl_.M() - 1;
    const int max_operands =
        std::min(premises, 1 << std::max(0, opts_.max_depth - 1));
    for (int p = 1; p <= max_operands && !Full(); ++p) {
      L_ = 2 * p + 1;
      seq_.assign(L_, 0);
      stack_.clear();
      used_.assign(premises, false);
      Dfs(0, premises);
    }
    return std::move(out_);
  }

 private:
  bool Full() const {
    return opts_.max_solutions > 0 &&
           static_cast<int>(out_.size()) >= opts_.max_solutions;
  }

  // Whether a stack of size s can be reduced to exactly one entry in r
  // positions using at most `free` more operands.
  static bool Reachable(int s, int r, int free) {
    if (s - 1 > r || (r - (s - 1)) % 2 != 0) return false;
    return (r - (s - 1)) / 2 <= free;
  }

  void Dfs(int i, int free) {
    if (Full()) return;
    const int M = sl_.M();
    if (i == L_ - 1) {
      if (stack_.size() != 2) return;
      const Entry &a = stack_[0], &b = stack_[1];
      for (Op op : {Op::kEqual, Op::kSubset}) {
        if (!ClassesOk(op, a, b) || !(a.types & b.types)) continue;
        seq_[i] = M + static_cast<int>(op);
        out_.push_back(Equation{seq_});
        if (Full()) return;
      }
      return;
    }
    if (i == L_ - 2) {
      if (stack_.size() != 1) return;
      seq_[i] = M - 1;
      stack_.push_back(Entry{sl_.IsSingle(M - 1), Bit(sl_.hyp_type), 0});
      Dfs(i + 1, free);
      stack_.pop_back();
      return;
    }
    const int s = static_cast<int>(stack_.size());
    const int r = L_ - 3 - i;  // positions left before the hypothesis
    // Operands, in symbol order.
    if (free > 0 && Reachable(s + 1, r, free - 1)) {
      for (int x = 0; x < M - 1; ++x) {
        if (used_[x]) continue;
        used_[x] = true;
        seq_[i] = x;
        stack_.push_back(Entry{sl_.IsSingle(x), Bit(sl_.TypeOf(x)), 0});
        Dfs(i + 1, free - 1);
        stack_.pop_back();
        used_[x] = false;
        if (Full()) return;
      }
    }
    // Non-relation operators.
    if (s >= 2 && Reachable(s - 1, r, free)) {
      const Entry b = stack_[s - 1], a = stack_[s - 2];
      const int height = std::max(a.height, b.height) + 1;
      if (height > opts_.max_depth - 1) return;
      for (int k = 0; k < kNumOps; ++k) {
        const Op op = static_cast<Op>(k);
        if (IsRelation(op) || !ClassesOk(op, a, b)) continue;
        const TypeMask t = ResultTypes(op, a.types, b.types);
        if (!t) continue;
        seq_[i] = M + k;
        stack_.resize(s - 2);
        stack_.push_back(Entry{IsArithmetic(op), t, height});
        Dfs(i + 1, free);
        stack_.pop_back();
        stack_.push_back(a);
        stack_.push_back(b);
        if (Full()) return;
      }
    }
  }

  const SymbolList &sl_;
  const ComposerOptions &opts_;
  int L_ = 0;
  std::vector<int> seq_;
  std::vector<Entry> stack_;
  std::vector<bool> used_;
  std::vector<Equation> out_;
};

bool IsOne(const Interval &v) { return v == Interval::Point(1); }

int Find(std::vector<int> &parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

const char *OpSymbol(Op op) {
  switch (op) {
    case Op::kAdd: return "+";
    case Op::kSubtract: return "-";
    case Op::kMultiply: return "*";
    case Op::kDivide: return "/";
    case Op::kIntersect: return "&";
    case Op::kUnion: return "|";
    case Op::kSetMinus: return "\\";
    case Op::kEqual: return "=";
    case Op::kSubset: return "<=";
  }
  return "?";
}

bool IsArithmetic(Op op) {
  return op == Op::kAdd || op == Op::kSubtract || op == Op::kMultiply ||
         op == Op::kDivide;
}

bool IsRangeOp(Op op) {
  return op == Op::kIntersect || op == Op::kUnion || op == Op::kSetMinus;
}

bool IsRelation(Op op) { return op == Op::kEqual || op == Op::kSubset; }

bool SymbolList::IsSingle(int x) const {
  if (x < K()) return true;
  if (IsHyp(x)) return hyp.val.IsPoint();
  return false;
}

bool SymbolList::IsRange(int x) const {
  if (x >= K() && x < M() - 1) return true;
  if (IsHyp(x)) return !hyp.val.IsPoint();
  return false;
}

const NumSet &SymbolList::Quantity(int x) const {
  if (x < K()) return singles[x];
  if (x < M() - 1) return ranges[x - K()];
  if (IsHyp(x)) return hyp;
  throw std::out_of_range("not a quantity symbol");
}

int SymbolList::TypeOf(int x) const {
  if (x < K()) return single_types[x];
  if (x < M() - 1) return range_types[x - K()];
  if (IsHyp(x)) return hyp_type;
  throw std::out_of_range("not a quantity symbol");
}

std::string SymbolList::Name(int x) const {
  if (IsOperator(x)) return OpSymbol(OpAt(x));
  if (IsHyp(x)) return "H1";
  size_t id = x < static_cast<int>(premise_ids.size()) ? premise_ids[x] : x;
  return "P" + std::to_string(id + 1);
}

SymbolList SymbolList::Build(const NumSet &hyp, int hyp_type,
                             const std::vector<NumSet> &premises,
                             const std::vector<int> &types,
                             const std::vector<size_t> &ids) {
  SymbolList sl;
  sl.hyp = hyp;
  sl.hyp_type = hyp_type;
  std::vector<size_t> single_ids, range_ids;
  for (size_t k = 0; k < premises.size(); ++k) {
    const size_t id = k < ids.size() ? ids[k] : k;
    if (premises[k].val.IsPoint()) {
      sl.singles.push_back(premises[k]);
      sl.single_types.push_back(types.at(k));
      single_ids.push_back(id);
    } else {
      sl.ranges.push_back(premises[k]);
      sl.range_types.push_back(types.at(k));
      range_ids.push_back(id);
    }
  }
  sl.premise_ids = single_ids;
  sl.premise_ids.insert(sl.premise_ids.end(), range_ids.begin(),
                        range_ids.end());
  return sl;
}

EquationLayout Layout(const SymbolList &sl, const Equation &eq) {
  EquationLayout lay;
  int d = -1;
  for (int x : eq.postfix) {
    const bool o = sl.IsOperator(x);
    lay.op.push_back(o);
    lay.single.push_back(!o && sl.IsSingle(x));
    lay.range.push_back(!o && sl.IsRange(x));
    d = lay.depth.empty() ? 0 : d - 2 * (o ? 1 : 0) + 1;
    lay.depth.push_back(d);
  }
  return lay;
}

std::string ToPostfixString(const SymbolList &sl, const Equation &eq) {
  std::string out;
  for (int x : eq.postfix) {
    if (!out.empty()) out += ' ';
    out += sl.Name(x);
  }
  return out;
}

int TreeDepth(const SymbolList &sl, const Equation &eq) {
  std::vector<int> heights;
  for (int x : eq.postfix) {
    if (!sl.IsOperator(x)) {
      heights.push_back(0);
      continue;
    }
    if (heights.size() < 2) return -1;
    int b = heights.back();
    heights.pop_back();
    int a = heights.back();
    heights.back() = std::max(a, b) + 1;
  }
  return heights.size() == 1 ? heights[0] : -1;
}

std::vector<Equation> EnumerateEquations(const SymbolList &sl,
                                         const ComposerOptions &opts) {
  if (opts.max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  return Enumerator(sl, opts).Run();
}

const char *EvalOutcomeName(EvalOutcome o) {
  switch (o) {
    case EvalOutcome::kJustified: return "justified";
    case EvalOutcome::kUnjustified: return "unjustified";
    case EvalOutcome::kInvalid: return "invalid";
  }
  return "?";
}

EvalOutcome Evaluate(const SymbolList &sl, const Equation &eq) {
  std::vector<Interval> stack;
  for (size_t i = 0; i < eq.postfix.size(); ++i) {
    const int x = eq.postfix[i];
    if (!sl.IsOperator(x)) {
      stack.push_back(sl.Quantity(x).val);
      continue;
    }
    if (stack.size() < 2) return EvalOutcome::kInvalid;
    const Interval b = stack.back();
    stack.pop_back();
    const Interval a = stack.back();
    stack.pop_back();
    const Op op = sl.OpAt(x);
    if (IsRelation(op)) {
      if (i + 1 != eq.postfix.size() || !stack.empty()) {
        return EvalOutcome::kInvalid;
      }
      const bool ok = op == Op::kEqual ? a == b : IsSubset(a, b);
      return ok ? EvalOutcome::kJustified : EvalOutcome::kUnjustified;
    }
    if ((op == Op::kMultiply && (IsOne(a) || IsOne(b))) ||
        (op == Op::kDivide && IsOne(b))) {
      return EvalOutcome::kInvalid;
    }
    IntervalResult r = IntervalError::kEmpty;
    switch (op) {
      case Op::kAdd: r = Add(a, b); break;
      case Op::kSubtract: r = Subtract(a, b); break;
      case Op::kMultiply: r = Multiply(a, b); break;
      case Op::kDivide: r = Divide(a, b); break;
      case Op::kIntersect: r = Intersect(a, b); break;
      case Op::kUnion: r = Union(a, b); break;
      case Op::kSetMinus: r = SetMinus(a, b); break;
      default: break;
    }
    const Interval *v = std::get_if<Interval>(&r);
    if (!v) return EvalOutcome::kInvalid;
    stack.push_back(*v);
  }
  return EvalOutcome::kInvalid;
}

std::vector<int> TypeClasses(const std::vector<NumSet> &premises,
                             const NumSet &hyp, const LexiconSet &lex) {
  std::vector<const NumSet *> all;
  for (const auto &p : premises) all.push_back(&p);
  all.push_back(&hyp);
  std::vector<int> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t a = 0; a < all.size(); ++a) {
    for (size_t b = a + 1; b < all.size(); ++b) {
      if (Compatible(*all[a], *all[b], lex)) {
        parent[Find(parent, b)] = Find(parent, a);
      }
    }
  }
  // Dense indices in order of first appearance.
  std::vector<int> dense(all.size(), -1), out;
  int next = 0;
  for (size_t k = 0; k < all.size(); ++k) {
    int root = Find(parent, k);
    if (dense[root] < 0) dense[root] = next++;
    out.push_back(dense[root]);
  }
  return out;
}

std::vector<Justification> Justify(const NumSet &hyp,
                                   const std::vector<NumSet> &premises,
                                   const std::vector<CompatiblePair> &pairs,
                                   size_t hyp_index, const LexiconSet &lex,
                                   const ComposerOptions &opts,
                                   size_t max_premises) {
  std::vector<size_t> order;
  std::vector<bool> taken(premises.size(), false);
  for (const auto &pr : pairs) {
    if (pr.hypothesis == hyp_index && pr.premise < premises.size() &&
        !taken[pr.premise]) {
      taken[pr.premise] = true;
      order.push_back(pr.premise);
    }
  }
  if (order.empty()) return {};
  for (size_t k = 0; k < premises.size(); ++k) {
    if (!taken[k]) order.push_back(k);
  }
  if (order.size() > max_premises) order.resize(max_premises);
  std::sort(order.begin(), order.end());

  std::vector<NumSet> chosen;
  for (size_t k : order) chosen.push_back(AlignTo(premises[k], hyp));
  std::vector<int> types = TypeClasses(chosen, hyp, lex);
  const int hyp_type = types.back();
  types.pop_back();
  SymbolList sl = SymbolList::Build(hyp, hyp_type, chosen, types, order);

  std::vector<Justification> out;
  for (const auto &eq : EnumerateEquations(sl, opts)) {
    if (Evaluate(sl, eq) == EvalOutcome::kJustified) {
      out.push_back(Justification{eq, ToPostfixString(sl, eq)});
    }
  }
  return out;
}

}  // namespace quantnli
