#include "quantnli/interval.h"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace quantnli {

namespace {

// Lower endpoint a is at least as tight (starts no earlier) as b.
bool LowerNotLooser(const Interval &a, const Interval &b) {
  if (!b.lo()) return true;
  if (!a.lo()) return false;
  if (*a.lo() != *b.lo()) return *a.lo() > *b.lo();
  return a.lo_open() || !b.lo_open();
}

bool UpperNotLooser(const Interval &a, const Interval &b) {
  if (!b.hi()) return true;
  if (!a.hi()) return false;
  if (*a.hi() != *b.hi()) return *a.hi() < *b.hi();
  return a.hi_open() || !b.hi_open();
}

Interval Negate(const Interval &a) {
  std::optional<Rational> lo, hi;
  if (a.hi()) lo = -*a.hi();
  if (a.lo()) hi = -*a.lo();
  return *Interval::Make(lo, a.hi_open(), hi, a.lo_open());
}

IntervalResult FromOptional(std::optional<Interval> v) {
  if (v) return *v;
  return IntervalError::kEmpty;
}

struct Extremum {
  Rational value;
  bool attained;
};

// Image of multiplication over a bounded box. Extremes of x*y lie on the
// corners; a corner value is attained iff both factors are attained there.
// A zero extremum is also attained whenever zero is a member of either
// factor.
Interval MultiplyBounded(const Interval &a, const Interval &b) {
  const std::array<std::pair<Rational, bool>, 2> xs = {
      std::pair{*a.lo(), !a.lo_open()}, std::pair{*a.hi(), !a.hi_open()}};
  const std::array<std::pair<Rational, bool>, 2> ys = {
      std::pair{*b.lo(), !b.lo_open()}, std::pair{*b.hi(), !b.hi_open()}};
  std::optional<Extremum> lo, hi;
  for (const auto &[x, xa] : xs) {
    for (const auto &[y, ya] : ys) {
      Rational v = x * y;
      bool att = xa && ya;
      if (!lo || v < lo->value) {
        lo = Extremum{v, att};
      } else if (v == lo->value) {
        lo->attained = lo->attained || att;
      }
      if (!hi || v > hi->value) {
        hi = Extremum{v, att};
      } else if (v == hi->value) {
        hi->attained = hi->attained || att;
      }
    }
  }
  const bool zero_member = a.Contains(0) || b.Contains(0);
  if (lo->value == 0 && zero_member) lo->attained = true;
  if (hi->value == 0 && zero_member) hi->attained = true;
  auto r = Interval::Make(lo->value, !lo->attained, hi->value, !hi->attained);
  assert(r);
  return *r;
}

}  // namespace

Interval Interval::Point(const Rational &v) {
  Interval r;
  r.lo_ = v;
  r.hi_ = v;
  r.lo_open_ = false;
  r.hi_open_ = false;
  return r;
}

Interval Interval::Closed(const Rational &lo, const Rational &hi) {
  auto r = Make(lo, false, hi, false);
  if (!r) throw std::invalid_argument("Interval::Closed requires lo <= hi");
  return *r;
}

Interval Interval::Below(const Rational &hi, bool open) {
  return *Make(std::nullopt, true, hi, open);
}

Interval Interval::Above(const Rational &lo, bool open) {
  return *Make(lo, open, std::nullopt, true);
}

Interval Interval::Everything() {
  return *Make(std::nullopt, true, std::nullopt, true);
}

std::optional<Interval> Interval::Make(std::optional<Rational> lo,
                                       bool lo_open,
                                       std::optional<Rational> hi,
                                       bool hi_open) {
  if (!lo) lo_open = true;
  if (!hi) hi_open = true;
  if (lo && hi) {
    if (*lo > *hi) return std::nullopt;
    if (*lo == *hi && (lo_open || hi_open)) return std::nullopt;
  }
  Interval r;
  r.lo_ = std::move(lo);
  r.hi_ = std::move(hi);
  r.lo_open_ = lo_open;
  r.hi_open_ = hi_open;
  return r;
}

bool Interval::IsPoint() const {
  return lo_ && hi_ && *lo_ == *hi_;
}

bool Interval::Contains(const Rational &x) const {
  if (lo_) {
    if (x < *lo_ || (x == *lo_ && lo_open_)) return false;
  }
  if (hi_) {
    if (x > *hi_ || (x == *hi_ && hi_open_)) return false;
  }
  return true;
}

std::string Interval::ToString() const {
  std::string s;
  s += lo_open_ ? "(" : "[";
  s += lo_ ? FormatRational(*lo_) : "-inf";
  s += ", ";
  s += hi_ ? FormatRational(*hi_) : "+inf";
  s += hi_open_ ? ")" : "]";
  return s;
}

const char *IntervalErrorName(IntervalError e) {
  switch (e) {
    case IntervalError::kEmpty: return "empty";
    case IntervalError::kNotContiguous: return "not-contiguous";
    case IntervalError::kDivisionByZero: return "division-by-zero";
    case IntervalError::kUnbounded: return "unbounded";
  }
  return "unknown";
}

IntervalResult Add(const Interval &a, const Interval &b) {
  std::optional<Rational> lo, hi;
  if (a.lo() && b.lo()) lo = *a.lo() + *b.lo();
  if (a.hi() && b.hi()) hi = *a.hi() + *b.hi();
  return FromOptional(Interval::Make(lo, a.lo_open() || b.lo_open(), hi,
                                     a.hi_open() || b.hi_open()));
}

IntervalResult Subtract(const Interval &a, const Interval &b) {
  return Add(a, Negate(b));
}

IntervalResult Multiply(const Interval &a, const Interval &b) {
  if (!a.IsBounded() || !b.IsBounded()) return IntervalError::kUnbounded;
  return MultiplyBounded(a, b);
}

IntervalResult Divide(const Interval &a, const Interval &b) {
  // Zero in the closure of the divisor.
  const bool lo_le_zero = !b.lo() || *b.lo() <= 0;
  const bool hi_ge_zero = !b.hi() || *b.hi() >= 0;
  if (lo_le_zero && hi_ge_zero) return IntervalError::kDivisionByZero;
  if (!a.IsBounded() || !b.IsBounded()) return IntervalError::kUnbounded;
  Rational inv_lo = Rational(1) / *b.hi();
  Rational inv_hi = Rational(1) / *b.lo();
  Interval reciprocal =
      *Interval::Make(inv_lo, b.hi_open(), inv_hi, b.lo_open());
  return MultiplyBounded(a, reciprocal);
}

IntervalResult Intersect(const Interval &a, const Interval &b) {
  const Interval &lower = LowerNotLooser(a, b) ? a : b;
  const Interval &upper = UpperNotLooser(a, b) ? a : b;
  return FromOptional(Interval::Make(lower.lo(), lower.lo_open(), upper.hi(),
                                     upper.hi_open()));
}

IntervalResult Union(const Interval &a, const Interval &b) {
  // first starts no later than second.
  const bool a_first = LowerNotLooser(b, a);
  const Interval &first = a_first ? a : b;
  const Interval &second = a_first ? b : a;
  bool connected;
  if (!first.hi() || !second.lo()) {
    connected = true;
  } else if (*first.hi() != *second.lo()) {
    connected = *first.hi() > *second.lo();
  } else {
    connected = !(first.hi_open() && second.lo_open());
  }
  if (!connected) return IntervalError::kNotContiguous;
  const Interval &upper = UpperNotLooser(a, b) ? b : a;
  return FromOptional(Interval::Make(first.lo(), first.lo_open(), upper.hi(),
                                     upper.hi_open()));
}

IntervalResult SetMinus(const Interval &a, const Interval &b) {
  if (Disjoint(a, b)) return a;
  std::optional<Interval> left, right;
  if (b.lo()) {
    auto piece = Intersect(a, Interval::Below(*b.lo(), !b.lo_open()));
    if (Ok(piece)) left = std::get<Interval>(piece);
  }
  if (b.hi()) {
    auto piece = Intersect(a, Interval::Above(*b.hi(), !b.hi_open()));
    if (Ok(piece)) right = std::get<Interval>(piece);
  }
  if (left && right) return IntervalError::kNotContiguous;
  if (left) return *left;
  if (right) return *right;
  return IntervalError::kEmpty;
}

bool IsSubset(const Interval &a, const Interval &b) {
  return LowerNotLooser(a, b) && UpperNotLooser(a, b);
}

bool Disjoint(const Interval &a, const Interval &b) {
  return !Ok(Intersect(a, b));
}

Interval Widen(const Interval &v, const Rational &fraction) {
  std::optional<Rational> lo = v.lo(), hi = v.hi();
  if (lo) lo = *lo - abs(*lo) * fraction;
  if (hi) hi = *hi + abs(*hi) * fraction;
  return *Interval::Make(lo, v.lo_open(), hi, v.hi_open());
}

Interval Scale(const Interval &v, const Rational &factor) {
  if (factor <= 0) throw std::invalid_argument("Scale requires factor > 0");
  std::optional<Rational> lo = v.lo(), hi = v.hi();
  if (lo) lo = *lo * factor;
  if (hi) hi = *hi * factor;
  return *Interval::Make(lo, v.lo_open(), hi, v.hi_open());
}

}  // namespace quantnli
