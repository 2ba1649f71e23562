#ifndef QUANTNLI_INTERVAL_H_
#define QUANTNLI_INTERVAL_H_

#include <optional>
#include <string>
#include <variant>

#include "quantnli/number.h"

namespace quantnli {

// A contiguous range of the extended real line with per-endpoint openness.
// A missing endpoint is infinite. Invariants:
//   lo <= hi, and lo == hi only for a closed point;
//   infinite endpoints are open.
// Single values are degenerate closed intervals.
class Interval {
 public:
  // The point [v, v].
  static Interval Point(const Rational &v);
  // [lo, hi]. Requires lo <= hi.
  static Interval Closed(const Rational &lo, const Rational &hi);
  // (-inf, hi) or (-inf, hi].
  static Interval Below(const Rational &hi, bool open);
  // (lo, +inf) or [lo, +inf).
  static Interval Above(const Rational &lo, bool open);
  static Interval Everything();

  // General constructor. Returns nullopt when the arguments describe an
  // empty set. Infinite endpoints are forced open.
  static std::optional<Interval> Make(std::optional<Rational> lo, bool lo_open,
                                      std::optional<Rational> hi,
                                      bool hi_open);

  const std::optional<Rational> &lo() const { return lo_; }
  const std::optional<Rational> &hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  bool IsPoint() const;
  bool IsBounded() const { return lo_ && hi_; }
  bool Contains(const Rational &x) const;

  // "[1, 5)", "(-inf, 10)"; a point prints as "[3, 3]".
  std::string ToString() const;

  friend bool operator==(const Interval &a, const Interval &b) = default;

 private:
  Interval() = default;

  std::optional<Rational> lo_;
  std::optional<Rational> hi_;
  bool lo_open_ = true;
  bool hi_open_ = true;
};

enum class IntervalError {
  kEmpty,            // result is the empty set
  kNotContiguous,    // result is not a single interval
  kDivisionByZero,   // divisor interval touches zero
  kUnbounded,        // multiplicative operator on an unbounded operand
};

const char *IntervalErrorName(IntervalError e);

using IntervalResult = std::variant<Interval, IntervalError>;

inline bool Ok(const IntervalResult &r) {
  return std::holds_alternative<Interval>(r);
}

// Set-image arithmetic {x op y : x in a, y in b}. On points this is exact
// arithmetic. Division requires zero outside the closure of the divisor.
IntervalResult Add(const Interval &a, const Interval &b);
IntervalResult Subtract(const Interval &a, const Interval &b);
IntervalResult Multiply(const Interval &a, const Interval &b);
IntervalResult Divide(const Interval &a, const Interval &b);

// Set operations. Results that are not a single interval are reported as
// kNotContiguous; empty results as kEmpty.
IntervalResult Intersect(const Interval &a, const Interval &b);
IntervalResult Union(const Interval &a, const Interval &b);
IntervalResult SetMinus(const Interval &a, const Interval &b);

// True iff every point of a lies in b.
bool IsSubset(const Interval &a, const Interval &b);

bool Disjoint(const Interval &a, const Interval &b);

// Widens by a relative fraction on both sides: for a point v and fraction
// 0.02 this gives [0.98 v, 1.02 v]. Infinite endpoints stay infinite.
Interval Widen(const Interval &v, const Rational &fraction);

// Multiplies every endpoint by a positive factor.
Interval Scale(const Interval &v, const Rational &factor);

}  // namespace quantnli

#endif  // QUANTNLI_INTERVAL_H_
