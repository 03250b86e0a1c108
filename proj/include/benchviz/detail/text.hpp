#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace benchviz::detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::string_view trim_left(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

// Splits on '\n'; a trailing '\r' is dropped from each line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

inline bool istarts_with(std::string_view s, std::string_view prefix) noexcept {
  return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

inline bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

// Accepts `digits[.digits]` only: no sign, no exponent, no comma decimals.
inline bool is_plain_decimal(std::string_view s) noexcept {
  std::size_t i = 0;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '.') return false;
  ++i;
  std::size_t frac_start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  return i == s.size() && i > frac_start;
}

// Parses a plain decimal token; nullopt when it is not a finite
// non-negative decimal number.
inline std::optional<double> parse_plain_decimal(std::string_view s) noexcept {
  if (!is_plain_decimal(s)) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

// Multiplies a plain decimal token by 10^3 by moving the decimal point in
// the text before conversion, so "3.20" becomes exactly 3200.
inline std::optional<double> parse_decimal_times_1000(std::string_view s) {
  if (!is_plain_decimal(s)) return std::nullopt;
  std::string digits;
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  digits.append(int_part);
  std::size_t moved = std::min<std::size_t>(3, frac_part.size());
  digits.append(frac_part.substr(0, moved));
  digits.append(3 - moved, '0');
  if (moved < frac_part.size()) {
    digits.push_back('.');
    digits.append(frac_part.substr(moved));
  }
  return parse_plain_decimal(digits);
}

inline std::optional<long long> parse_unsigned(std::string_view s) noexcept {
  if (s.empty()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

// Minimal forward cursor over one line of text.
class Cursor {
 public:
  explicit Cursor(std::string_view text) noexcept : rest_(text) {}

  void skip_ws() noexcept { rest_ = trim_left(rest_); }

  bool consume(std::string_view literal) noexcept {
    skip_ws();
    if (rest_.substr(0, literal.size()) != literal) return false;
    rest_.remove_prefix(literal.size());
    return true;
  }

  // Reads characters up to (not including) whitespace or any of `stops`.
  std::string_view token(std::string_view stops = {}) noexcept {
    skip_ws();
    std::size_t i = 0;
    while (i < rest_.size() && !is_space(rest_[i]) && stops.find(rest_[i]) == std::string_view::npos) ++i;
    auto tok = rest_.substr(0, i);
    rest_.remove_prefix(i);
    return tok;
  }

  bool at_end() noexcept {
    skip_ws();
    return rest_.empty();
  }

  std::string_view rest() const noexcept { return rest_; }

 private:
  std::string_view rest_;
};

}  // namespace benchviz::detail
