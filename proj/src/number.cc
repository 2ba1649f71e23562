#include "quantnli/number.h"

#include <cctype>

namespace quantnli {

using boost::multiprecision::cpp_int;

std::optional<Rational> ParseDecimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  cpp_int digits = 0;
  cpp_int scale = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    seen_digit = true;
    digits = digits * 10 + (c - '0');
    if (seen_point) scale *= 10;
  }
  if (!seen_digit) return std::nullopt;
  Rational value(digits, scale);
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational &value) {
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // Terminating decimal iff the denominator only has factors 2 and 5.
  cpp_int rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  int places = std::max(twos, fives);
  cpp_int pow10 = 1;
  for (int k = 0; k < places; ++k) pow10 *= 10;
  cpp_int scaled = num * (pow10 / den);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= places) {
    s.insert(0, places - s.size() + 1, '0');
  }
  s.insert(s.size() - places, ".");
  return negative ? "-" + s : s;
}

double ToDouble(const Rational &value) {
  return value.convert_to<double>();
}

bool IsInteger(const Rational &value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace quantnli
