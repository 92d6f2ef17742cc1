#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tplactic {

// Exact non-negative (in run contexts: positive) rational time length.
// cpp_rational keeps values gcd-reduced with the sign on the numerator.
using Duration = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a decimal numeral ("12", "0.45", "3.25") or a fraction "p/q".
// A leading '-' is accepted so callers can report negative values
// themselves; anything else malformed throws ParseError.
Duration parse_duration(std::string_view text);

// "41/50", "3", "-7/2".
std::string to_fraction_string(const Duration& d);

// True when d has a finite decimal expansion (denominator 2^a 5^b).
bool is_terminating_decimal(const Duration& d);

// Exact shortest decimal ("0.82", "3.2", "4") when terminating, otherwise
// the fraction form. Parsing the result gives back d.
std::string to_exact_string(const Duration& d);

// Human-readable decimal with at most `digits` fractional digits, rounded
// half away from zero; prefixed with "≈" when the value is not exact.
std::string to_display_string(const Duration& d, int digits = 6);

// Fixed-point rendering with exactly `digits` fractional digits, rounded
// half away from zero. No approximation marker.
std::string to_fixed_string(const Duration& d, int digits);

BigInt numerator_of(const Duration& d);
BigInt denominator_of(const Duration& d);

} // namespace tplactic
