#include "interval_oracle.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oracle {

using quantnli::Interval;
using quantnli::IntervalError;
using quantnli::IntervalResult;
using quantnli::Rational;

Frac Frac::Of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) n = -n, d = -d;
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) n /= g, d /= g;
  return Frac{n, d};
}

Frac operator+(Frac a, Frac b) {
  if (a.d == b.d) return a.d == 1 ? Frac{a.n + b.n, 1} : Frac::Of(a.n + b.n, a.d);
  return Frac::Of(a.n * b.d + b.n * a.d, a.d * b.d);
}
Frac operator-(Frac a, Frac b) {
  if (a.d == b.d) return a.d == 1 ? Frac{a.n - b.n, 1} : Frac::Of(a.n - b.n, a.d);
  return Frac::Of(a.n * b.d - b.n * a.d, a.d * b.d);
}
Frac operator*(Frac a, Frac b) {
  if (a.d == 1 && b.d == 1) return Frac{a.n * b.n, 1};
  return Frac::Of(a.n * b.n, a.d * b.d);
}
Frac operator/(Frac a, Frac b) { return Frac::Of(a.n * b.d, a.d * b.n); }
bool operator<(Frac a, Frac b) {
  if (a.d == b.d) return a.n < b.n;
  return static_cast<__int128>(a.n) * b.d < static_cast<__int128>(b.n) * a.d;
}
bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }

namespace {

std::string Str(Frac f) {
  return f.d == 1 ? std::to_string(f.n)
                  : std::to_string(f.n) + "/" + std::to_string(f.d);
}

Frac FromRational(const Rational &r) {
  return Frac::Of(boost::multiprecision::numerator(r).convert_to<std::int64_t>(),
                  boost::multiprecision::denominator(r).convert_to<std::int64_t>());
}

bool IsArith(SetOp op) {
  return op == SetOp::kAdd || op == SetOp::kSub || op == SetOp::kMul ||
         op == SetOp::kDiv;
}

Frac Apply(SetOp op, Frac x, Frac y) {
  switch (op) {
    case SetOp::kAdd: return x + y;
    case SetOp::kSub: return x - y;
    case SetOp::kMul: return x * y;
    default: return x / y;
  }
}

void Refine(std::vector<Frac> &pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return;
  std::vector<Frac> out;
  out.reserve(pts.size() * 2 + 2);
  out.push_back(pts.front() - Frac::Of(1));
  for (size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i]);
    if (i + 1 < pts.size()) out.push_back((pts[i] + pts[i + 1]) * Frac::Of(1, 2));
  }
  out.push_back(pts.back() + Frac::Of(1));
  pts.swap(out);
}

// z in {x op y : x in a, y in b}? Search over x at the critical points of
// the preimage and between them; y is then forced.
bool InImage(SetOp op, const Box &a, const Box &b, Frac z) {
  const Frac zero = Frac::Of(0);
  std::array<Frac, 16> xs;
  size_t n = 0;
  xs[n++] = a.lo;
  xs[n++] = a.hi;
  xs[n++] = zero;
  for (Frac e : {b.lo, b.hi}) {
    switch (op) {
      case SetOp::kAdd: xs[n++] = z - e; break;
      case SetOp::kSub: xs[n++] = z + e; break;
      case SetOp::kMul:
        if (!(e == zero)) xs[n++] = z / e;
        break;
      default: xs[n++] = z * e; break;
    }
  }
  std::sort(xs.begin(), xs.begin() + n);
  n = std::unique(xs.begin(), xs.begin() + n) - xs.begin();
  for (size_t k = 0, m = n; k + 1 < m; ++k) {
    xs[n++] = (xs[k] + xs[k + 1]) * Frac::Of(1, 2);
  }
  for (size_t k = 0; k < n; ++k) {
    const Frac x = xs[k];
    if (!a.Contains(x)) continue;
    Frac y;
    switch (op) {
      case SetOp::kAdd: y = z - x; break;
      case SetOp::kSub: y = x - z; break;
      case SetOp::kMul:
        if (x == zero) {
          if (z == zero) return true;
          continue;
        }
        y = z / x;
        break;
      default:
        if (z == zero) {
          if (x == zero) return true;
          continue;
        }
        y = x / z;
        if (y == zero) continue;
        break;
    }
    if (b.Contains(y)) return true;
  }
  return false;
}

bool InSet(SetOp op, const Box &a, const Box &b, Frac z) {
  switch (op) {
    case SetOp::kIntersect: return a.Contains(z) && b.Contains(z);
    case SetOp::kUnion: return a.Contains(z) || b.Contains(z);
    case SetOp::kMinus: return a.Contains(z) && !b.Contains(z);
    default: return InImage(op, a, b, z);
  }
}

IntervalResult RunLibrary(SetOp op, const Interval &a, const Interval &b) {
  switch (op) {
    case SetOp::kAdd: return quantnli::Add(a, b);
    case SetOp::kSub: return quantnli::Subtract(a, b);
    case SetOp::kMul: return quantnli::Multiply(a, b);
    case SetOp::kDiv: return quantnli::Divide(a, b);
    case SetOp::kIntersect: return quantnli::Intersect(a, b);
    case SetOp::kUnion: return quantnli::Union(a, b);
    default: return quantnli::SetMinus(a, b);
  }
}

}  // namespace

bool Box::Contains(Frac z) const {
  if (z < lo || hi < z) return false;
  if (lo_open && z == lo) return false;
  if (hi_open && z == hi) return false;
  return true;
}

Interval Box::ToInterval() const {
  auto r = [](Frac f) { return Rational(f.n) / Rational(f.d); };
  auto iv = Interval::Make(r(lo), lo_open, r(hi), hi_open);
  if (!iv) throw std::logic_error("empty box");
  return *iv;
}

std::string Box::ToString() const {
  return std::string(lo_open ? "(" : "[") + Str(lo) + ", " + Str(hi) +
         (hi_open ? ")" : "]");
}

std::vector<Box> IntegerBoxes(int lo, int hi) {
  std::vector<Box> out;
  for (int l = lo; l <= hi; ++l) {
    for (int h = l; h <= hi; ++h) {
      for (int m = 0; m < 4; ++m) {
        bool lo_open = m & 1, hi_open = m & 2;
        if (l == h && (lo_open || hi_open)) continue;
        out.push_back(Box{Frac::Of(l), Frac::Of(h), lo_open, hi_open});
      }
    }
  }
  return out;
}

const char *SetOpName(SetOp op) {
  switch (op) {
    case SetOp::kAdd: return "+";
    case SetOp::kSub: return "-";
    case SetOp::kMul: return "*";
    case SetOp::kDiv: return "/";
    case SetOp::kIntersect: return "intersect";
    case SetOp::kUnion: return "union";
    case SetOp::kMinus: return "setminus";
    case SetOp::kSubset: return "subset";
  }
  return "?";
}

std::optional<std::string> Check(SetOp op, const Box &a, const Box &b,
                                 Frac grid_step, int grid_extent) {
  auto fail = [&](const std::string &why) {
    return std::optional<std::string>(a.ToString() + " " + SetOpName(op) + " " +
                                       b.ToString() + ": " + why);
  };
  const Interval ia = a.ToInterval(), ib = b.ToInterval();

  std::vector<Frac> zs = {a.lo, a.hi, b.lo, b.hi, Frac::Of(0)};
  if (grid_step.n > 0) {
    for (Frac z = Frac::Of(-grid_extent); z <= Frac::Of(grid_extent);
         z = z + grid_step)
      zs.push_back(z);
  }

  if (op == SetOp::kSubset) {
    Refine(zs);
    bool want = true;
    for (Frac z : zs)
      if (a.Contains(z) && !b.Contains(z)) want = false;
    bool got = quantnli::IsSubset(ia, ib);
    if (got != want) return fail(got ? "library says subset" : "library says not subset");
    return std::nullopt;
  }

  std::optional<IntervalError> want_error;
  if (op == SetOp::kDiv && b.lo <= Frac::Of(0) && Frac::Of(0) <= b.hi)
    want_error = IntervalError::kDivisionByZero;

  IntervalResult got = RunLibrary(op, ia, ib);
  std::optional<Box> got_box;
  if (const Interval *iv = std::get_if<Interval>(&got)) {
    if (!iv->IsBounded()) return fail("unbounded result " + iv->ToString());
    got_box = Box{FromRational(*iv->lo()), FromRational(*iv->hi()), iv->lo_open(),
                  iv->hi_open()};
    zs.push_back(got_box->lo);
    zs.push_back(got_box->hi);
  }

  if (!want_error) {
    if (IsArith(op)) {
      for (Frac x : {a.lo, a.hi})
        for (Frac y : {b.lo, b.hi}) zs.push_back(Apply(op, x, y));
    }
    Refine(zs);
    std::vector<bool> member(zs.size());
    int runs = 0;
    for (size_t i = 0; i < zs.size(); ++i) {
      member[i] = InSet(op, a, b, zs[i]);
      if (member[i] && (i == 0 || !member[i - 1])) ++runs;
    }
    if (runs == 0) want_error = IntervalError::kEmpty;
    else if (runs > 1) want_error = IntervalError::kNotContiguous;
    if (want_error && IsArith(op)) return fail("oracle: image not an interval");
    if (!want_error) {
      if (!got_box)
        return fail(std::string("library error ") +
                    quantnli::IntervalErrorName(std::get<IntervalError>(got)));
      for (size_t i = 0; i < zs.size(); ++i) {
        if (got_box->Contains(zs[i]) != member[i])
          return fail("library " + got_box->ToString() + " disagrees at " +
                      Str(zs[i]));
      }
      return std::nullopt;
    }
  }

  if (got_box) return fail("expected error, library gave " + got_box->ToString());
  if (std::get<IntervalError>(got) != *want_error)
    return fail(std::string("expected ") + quantnli::IntervalErrorName(*want_error) +
                ", library gave " +
                quantnli::IntervalErrorName(std::get<IntervalError>(got)));
  return std::nullopt;
}

}  // namespace oracle
