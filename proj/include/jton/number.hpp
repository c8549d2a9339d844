#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>

#include "jton/error.hpp"
#include "jton/value.hpp"

namespace jton {

namespace detail {

constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

[[noreturn]] inline void bad_number(std::string_view slice, std::size_t offset, const char* why) {
  std::string detail(why);
  detail += " in '";
  detail.append(slice.substr(0, 32));
  detail += '\'';
  throw ParseError(ErrorKind::BadNumber, offset, std::move(detail));
}

inline double parse_double_slice(std::string_view s) {
  double d = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec == std::errc() && ptr == s.data() + s.size()) return d;
  // Out-of-range exponents: strtod saturates to +-inf or underflows to 0.
  const std::string copy(s);
  return std::strtod(copy.c_str(), nullptr);
}

}  // namespace detail

/// Parses one number lexeme (JSON number grammar plus Infinity, -Infinity
/// and NaN). `offset` is the slice's position in the document and is only
/// used for error reporting.
inline Number parse_number(std::string_view s, std::size_t offset = 0) {
  using detail::is_digit;
  const std::size_t n = s.size();
  std::size_t i = 0;
  const bool negative = n > 0 && s[0] == '-';
  if (negative) i = 1;

  // Special literals.
  if (i < n && (s[i] == 'I' || s[i] == 'N')) {
    const std::string_view word = s.substr(i);
    if (word == "Infinity") {
      return negative ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    }
    if (word == "NaN" && !negative) return std::numeric_limits<double>::quiet_NaN();
    detail::bad_number(s, offset, "unknown special number");
  }

  if (i >= n) detail::bad_number(s, offset, "missing digits");
  const std::size_t int_start = i;
  if (s[i] == '0') {
    ++i;
    if (i < n && is_digit(s[i])) detail::bad_number(s, offset, "leading zero");
  } else if (s[i] >= '1' && s[i] <= '9') {
    while (i < n && is_digit(s[i])) ++i;
  } else {
    detail::bad_number(s, offset + i, "expected digit");
  }
  const std::size_t int_digits = i - int_start;

  bool is_float = false;
  if (i < n && s[i] == '.') {
    ++i;
    if (i >= n || !is_digit(s[i])) detail::bad_number(s, offset + i, "expected digit after '.'");
    while (i < n && is_digit(s[i])) ++i;
    is_float = true;
  }
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= n || !is_digit(s[i])) detail::bad_number(s, offset + i, "expected exponent digit");
    while (i < n && is_digit(s[i])) ++i;
    is_float = true;
  }
  if (i != n) detail::bad_number(s, offset + i, "unexpected character");

  if (!is_float && int_digits <= 19) {
    std::uint64_t magnitude = 0;
    for (std::size_t k = int_start; k < n; ++k) {
      magnitude = magnitude * 10 + static_cast<std::uint64_t>(s[k] - '0');
    }
    // 19 digits cannot overflow uint64; check the signed range.
    constexpr std::uint64_t kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (!negative && magnitude <= kMax) return static_cast<std::int64_t>(magnitude);
    if (negative && magnitude <= kMax + 1) {
      return magnitude == kMax + 1 ? std::numeric_limits<std::int64_t>::min()
                                   : -static_cast<std::int64_t>(magnitude);
    }
  }
  return detail::parse_double_slice(s);
}

/// Appends the shortest text that reads back as exactly `d`. Finite values
/// always carry a '.' or an exponent so they reparse as Float; non-finite
/// values use the Infinity / -Infinity / NaN literals.
inline void append_double(std::string& out, double d) {
  if (std::isnan(d)) {
    out += "NaN";
    return;
  }
  if (std::isinf(d)) {
    out += d < 0 ? "-Infinity" : "Infinity";
    return;
  }
  char buf[32];
  // libstdc++ implements the shortest form with Ryu.
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  (void)ec;
  const std::string_view text(buf, static_cast<std::size_t>(end - buf));
  out += text;
  if (text.find_first_of(".e") == std::string_view::npos) out += ".0";
}

inline void append_int(std::string& out, std::int64_t i) {
  char buf[24];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, i);
  (void)ec;
  out.append(buf, static_cast<std::size_t>(end - buf));
}

}  // namespace jton
