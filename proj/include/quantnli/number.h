#ifndef QUANTNLI_NUMBER_H_
#define QUANTNLI_NUMBER_H_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quantnli {

// Exact rational number. All quantity values are held exactly so that
// equality tests in justification never suffer from float drift.
using Rational = boost::multiprecision::cpp_rational;

// Parses an optionally signed decimal literal ("73.0", "-1.25", "1e3" is not
// accepted). Thousands separators must be stripped by the caller.
std::optional<Rational> ParseDecimal(std::string_view text);

// Decimal rendering when the value has a terminating expansion, otherwise
// "num/den".
std::string FormatRational(const Rational &value);

double ToDouble(const Rational &value);

bool IsInteger(const Rational &value);

}  // namespace quantnli

#endif  // QUANTNLI_NUMBER_H_
