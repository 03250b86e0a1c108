#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "benchviz/detail/text.hpp"
#include "benchviz/error.hpp"

namespace benchviz {

// Key order matters to the plan parsers (MySQL wrappers nest outer to inner,
// MariaDB lists join order as a key sequence), so objects keep input order.
using JsonValue = nlohmann::ordered_json;

enum class DuplicateKeys {
  LastWins,  // later value replaces the earlier one in place
  KeepAll,   // every occurrence is kept, in input order
};

namespace detail {

// Recursive-descent JSON reader. Departs from RFC 8259 only by accepting a
// trailing comma before '}' or ']' and by the duplicate-key policy.
class LenientJsonReader {
 public:
  LenientJsonReader(std::string_view text, DuplicateKeys dups) : text_(text), dups_(dups) {}

  JsonValue parse_value() {
    if (++depth_ > kMaxDepth) fail("nesting too deep");
    skip_ws();
    if (eof()) fail("unexpected end of input");
    JsonValue out;
    switch (peek()) {
      case '{': out = parse_object(); break;
      case '[': out = parse_array(); break;
      case '"': out = parse_string(); break;
      case 't': expect_word("true"); out = true; break;
      case 'f': expect_word("false"); out = false; break;
      case 'n': expect_word("null"); out = nullptr; break;
      default: out = parse_number(); break;
    }
    --depth_;
    return out;
  }

  std::size_t position() const noexcept { return pos_; }

  void skip_ws() noexcept {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
  }

 private:
  static constexpr int kMaxDepth = 512;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::JsonError, what + " at offset " + std::to_string(pos_));
  }
  bool eof() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return text_[pos_]; }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) fail("invalid literal");
    pos_ += word.size();
  }

  JsonValue parse_object() {
    expect('{');
    JsonValue obj = JsonValue::object();
    auto& members = obj.get_ref<JsonValue::object_t&>();
    skip_ws();
    if (!eof() && peek() == '}') {
      ++pos_;
      return obj;
    }
    for (;;) {
      skip_ws();
      if (eof() || peek() != '"') fail("expected object key");
      std::string key = parse_string();
      expect(':');
      JsonValue value = parse_value();
      if (dups_ == DuplicateKeys::KeepAll) {
        members.emplace_back(std::move(key), std::move(value));
      } else {
        members[key] = std::move(value);
      }
      skip_ws();
      if (eof()) fail("unterminated object");
      if (peek() == '}') {
        ++pos_;
        return obj;
      }
      expect(',');
      skip_ws();
      if (!eof() && peek() == '}') {
        ++pos_;
        return obj;
      }
    }
  }

  JsonValue parse_array() {
    expect('[');
    JsonValue arr = JsonValue::array();
    skip_ws();
    if (!eof() && peek() == ']') {
      ++pos_;
      return arr;
    }
    for (;;) {
      arr.push_back(parse_value());
      skip_ws();
      if (eof()) fail("unterminated array");
      if (peek() == ']') {
        ++pos_;
        return arr;
      }
      expect(',');
      skip_ws();
      if (!eof() && peek() == ']') {
        ++pos_;
        return arr;
      }
    }
  }

  unsigned read_hex4() {
    if (pos_ + 4 > text_.size()) fail("truncated \\u escape");
    unsigned cp = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + pos_ + 4, cp, 16);
    if (ec != std::errc{} || ptr != text_.data() + pos_ + 4) fail("invalid \\u escape");
    pos_ += 4;
    return cp;
  }

  static void append_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  std::string parse_string() {
    expect('"');
    std::string out;
    for (;;) {
      if (eof()) fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') return out;
      if (static_cast<unsigned char>(c) < 0x20) fail("control character in string");
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (eof()) fail("unterminated escape");
      char e = text_[pos_++];
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case '/': out.push_back('/'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 't': out.push_back('\t'); break;
        case 'u': {
          unsigned cp = read_hex4();
          if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (text_.substr(pos_, 2) != "\\u") fail("unpaired surrogate");
            pos_ += 2;
            unsigned low = read_hex4();
            if (low < 0xDC00 || low > 0xDFFF) fail("invalid low surrogate");
            cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
          } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
            fail("unpaired surrogate");
          }
          append_utf8(out, cp);
          break;
        }
        default: fail("invalid escape");
      }
    }
  }

  JsonValue parse_number() {
    const std::size_t start = pos_;
    bool is_float = false;
    if (!eof() && peek() == '-') ++pos_;
    if (eof() || !is_digit(peek())) fail("unexpected character");
    if (peek() == '0') {
      ++pos_;
    } else {
      while (!eof() && is_digit(peek())) ++pos_;
    }
    if (!eof() && peek() == '.') {
      is_float = true;
      ++pos_;
      if (eof() || !is_digit(peek())) fail("digit expected after '.'");
      while (!eof() && is_digit(peek())) ++pos_;
    }
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      is_float = true;
      ++pos_;
      if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
      if (eof() || !is_digit(peek())) fail("digit expected in exponent");
      while (!eof() && is_digit(peek())) ++pos_;
    }
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    if (!is_float) {
      if (*first == '-') {
        std::int64_t v = 0;
        if (auto [p, ec] = std::from_chars(first, last, v); ec == std::errc{} && p == last) return v;
      } else {
        std::uint64_t v = 0;
        if (auto [p, ec] = std::from_chars(first, last, v); ec == std::errc{} && p == last) return v;
      }
    }
    double d = 0.0;
    auto [p, ec] = std::from_chars(first, last, d);
    if (ec != std::errc{} || p != last) fail("number out of range");
    return d;
  }

  std::string_view text_;
  DuplicateKeys dups_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Tries to read one JSON value starting at `start`; the remainder of the
// line after the value must be blank. Later lines are treated as noise.
inline std::optional<JsonValue> try_value_at(std::string_view text, std::size_t start, DuplicateKeys dups,
                                             std::string& error) {
  LenientJsonReader reader(text.substr(start), dups);
  try {
    JsonValue value = reader.parse_value();
    auto tail = text.substr(start + reader.position());
    auto eol = tail.find('\n');
    if (!trim(tail.substr(0, eol)).empty()) {
      error = "unexpected text after JSON value";
      return std::nullopt;
    }
    return value;
  } catch (const Error& e) {
    error = e.what();
    return std::nullopt;
  }
}

}  // namespace detail

/// Reads a JSON value from a client capture, tolerating leading and
/// trailing non-JSON lines (banners, the echoed statement, row counts),
/// trailing commas and duplicate keys. Strict JSON reads unchanged.
inline JsonValue read_lenient_json(std::string_view text, DuplicateKeys dups = DuplicateKeys::LastWins) {
  std::string first_error;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    auto line = text.substr(line_start, line_end - line_start);
    auto lead = line.find_first_not_of(" \t\r");
    if (lead != std::string_view::npos && (line[lead] == '{' || line[lead] == '[')) {
      std::string error;
      if (auto value = detail::try_value_at(text, line_start + lead, dups, error)) return *value;
      if (first_error.empty()) first_error = error;
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  throw Error(ErrorCode::JsonError,
              first_error.empty() ? "no JSON object or array found" : "no JSON value could be read: " + first_error);
}

}  // namespace benchviz
