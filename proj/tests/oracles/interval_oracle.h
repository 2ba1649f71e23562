#ifndef QUANTNLI_TESTS_INTERVAL_ORACLE_H_
#define QUANTNLI_TESTS_INTERVAL_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantnli/interval.h"

// Brute-force reference for the interval operators. Works on bounded
// intervals with small rational endpoints using plain int64 fractions, and
// decides membership of the exact image set point by point.
namespace oracle {

struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;  // > 0, reduced

  static Frac Of(std::int64_t n, std::int64_t d = 1);
};

Frac operator+(Frac a, Frac b);
Frac operator-(Frac a, Frac b);
Frac operator*(Frac a, Frac b);
Frac operator/(Frac a, Frac b);
bool operator<(Frac a, Frac b);
bool operator==(Frac a, Frac b);
inline bool operator<=(Frac a, Frac b) { return !(b < a); }

struct Box {
  Frac lo, hi;
  bool lo_open = false, hi_open = false;

  bool Contains(Frac z) const;
  quantnli::Interval ToInterval() const;
  std::string ToString() const;
};

// Every non-empty box with integer endpoints in [lo, hi] and every
// openness combination.
std::vector<Box> IntegerBoxes(int lo, int hi);

enum class SetOp { kAdd, kSub, kMul, kDiv, kIntersect, kUnion, kMinus, kSubset };
inline constexpr SetOp kAllOps[] = {SetOp::kAdd,       SetOp::kSub,
                                    SetOp::kMul,       SetOp::kDiv,
                                    SetOp::kIntersect, SetOp::kUnion,
                                    SetOp::kMinus,     SetOp::kSubset};
const char *SetOpName(SetOp op);

// Runs the library operator on (a, b) and compares with the brute-force
// answer. `grid_step` adds a regular grid of probe points in [-grid, grid]
// on top of the exact critical points. Returns a description of the first
// disagreement, or nullopt.
std::optional<std::string> Check(SetOp op, const Box &a, const Box &b,
                                 Frac grid_step, int grid_extent);

}  // namespace oracle

#endif  // QUANTNLI_TESTS_INTERVAL_ORACLE_H_
