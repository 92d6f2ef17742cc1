#include "tplactic/duration.hpp"

#include "tplactic/errors.hpp"

#include <cctype>

namespace tplactic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix.
BigInt from_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt{std::string(digits)};
}

BigInt pow10(int n) {
  BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

// round(|value| * 10^digits) half away from zero, returned as a digit
// string left-padded to at least digits+1 characters.
std::string scaled_digits(const Duration& value, int digits) {
  BigInt num = abs(numerator_of(value)) * pow10(digits);
  BigInt den = denominator_of(value);
  BigInt q = num / den;
  BigInt rem = num % den;
  if (2 * rem >= den) ++q;
  std::string s = q.str();
  if (s.size() < static_cast<std::size_t>(digits) + 1)
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  return s;
}

} // namespace

BigInt numerator_of(const Duration& d) {
  return boost::multiprecision::numerator(d);
}

BigInt denominator_of(const Duration& d) {
  return boost::multiprecision::denominator(d);
}

Duration parse_duration(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  Duration value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash);
    auto q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    const BigInt den = from_digits(q);
    if (den == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Duration(from_digits(p), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    const BigInt scaled = from_digits(std::string(whole) + std::string(frac));
    value = Duration(scaled, pow10(static_cast<int>(frac.size())));
  } else {
    if (!all_digits(s))
      throw ParseError("malformed number '" + std::string(text) + "'");
    value = Duration(from_digits(s));
  }
  return negative ? Duration(-value) : value;
}

std::string to_fraction_string(const Duration& d) {
  if (denominator_of(d) == 1) return numerator_of(d).str();
  return numerator_of(d).str() + "/" + denominator_of(d).str();
}

bool is_terminating_decimal(const Duration& d) {
  BigInt den = denominator_of(d);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

std::string to_exact_string(const Duration& d) {
  if (!is_terminating_decimal(d)) return to_fraction_string(d);
  BigInt den = denominator_of(d);
  int digits = 0;
  while (pow10(digits) % den != 0) ++digits;
  return to_fixed_string(d, digits);
}

std::string to_fixed_string(const Duration& d, int digits) {
  std::string s = scaled_digits(d, digits);
  std::string out;
  bool nonzero = false;
  for (char c : s)
    if (c != '0') nonzero = true;
  if (d < 0 && nonzero) out += '-';
  if (digits == 0) return out + s;
  out += s.substr(0, s.size() - static_cast<std::size_t>(digits));
  out += '.';
  out += s.substr(s.size() - static_cast<std::size_t>(digits));
  return out;
}

std::string to_display_string(const Duration& d, int digits) {
  if (is_terminating_decimal(d)) {
    std::string exact = to_exact_string(d);
    auto dot = exact.find('.');
    if (dot == std::string::npos ||
        exact.size() - dot - 1 <= static_cast<std::size_t>(digits))
      return exact;
  }
  std::string approx = to_fixed_string(d, digits);
  while (approx.back() == '0') approx.pop_back();
  if (approx.back() == '.') approx.pop_back();
  return "≈" + approx;
}

} // namespace tplactic
