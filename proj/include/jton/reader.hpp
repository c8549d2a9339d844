#pragma once

// Stage 2: index-jumping parser.
//
// The reader walks the input once, but never scans for structure itself:
// string extents come from the quote vector of the structural index, comments
// are skipped by jumping over runs of the comment mask, and every structural
// byte the grammar consumes is matched against a cursor into its class vector.
// Cursors only move forward.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jton/error.hpp"
#include "jton/number.hpp"
#include "jton/scanner.hpp"
#include "jton/value.hpp"

namespace jton {

enum class RowCountPolicy { Strict, Ignore };

struct ParseOptions {
  std::size_t max_depth = 1024;
  RowCountPolicy zen_row_count_policy = RowCountPolicy::Strict;
  /// false: accept only RFC 8259 JSON (no comments, unquoted keys,
  /// special numbers or Zen Grid tables).
  bool allow_extensions = true;
};

/// Optional instrumentation for the per-class cursors.
struct ParseTrace {
  std::array<std::size_t, kStructuralClasses> consumed{};
  std::array<std::size_t, kStructuralClasses> skipped{};
  std::array<std::size_t, kStructuralClasses> last_position{};
  std::size_t regressions = 0;

  bool monotone() const noexcept { return regressions == 0; }
};

namespace detail {

constexpr bool is_ident_start(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
constexpr bool is_ident_char(char c) noexcept { return is_ident_start(c) || is_digit(c); }

constexpr bool is_ws(char c) noexcept { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

inline bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !is_ident_start(s[0])) return false;
  for (char c : s.substr(1)) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

inline void append_utf8(std::string& out, std::uint32_t cp) {
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

inline int hex_digit(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline std::uint32_t read_hex4(std::string_view body, std::size_t i, std::size_t base) {
  if (i + 4 > body.size()) {
    throw ParseError(ErrorKind::BadUnicodeEscape, base + i, "truncated \\u escape");
  }
  std::uint32_t v = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const int h = hex_digit(body[i + k]);
    if (h < 0) throw ParseError(ErrorKind::BadUnicodeEscape, base + i + k, "non-hex digit in \\u escape");
    v = (v << 4) | static_cast<std::uint32_t>(h);
  }
  return v;
}

/// Decodes the bytes between a string's quotes. `base` is the document
/// offset of body[0].
inline std::string decode_string_body(std::string_view body, std::size_t base) {
  std::string out;
  std::size_t i = 0;
  const std::size_t n = body.size();
  while (true) {
    std::size_t j = i;
    while (j < n && body[j] != '\\' && static_cast<unsigned char>(body[j]) >= 0x20) ++j;
    if (out.empty() && j == n) return std::string(body);
    out.append(body.data() + i, j - i);
    if (j == n) return out;
    if (body[j] != '\\') {
      throw ParseError(ErrorKind::UnexpectedChar, base + j, "unescaped control character in string");
    }
    if (j + 1 >= n) throw ParseError(ErrorKind::BadEscape, base + j, "dangling backslash");
    const char e = body[j + 1];
    i = j + 2;
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
        std::uint32_t cp = read_hex4(body, i, base);
        i += 4;
        if (cp >= 0xD800 && cp <= 0xDBFF) {
          if (i + 1 < n && body[i] == '\\' && body[i + 1] == 'u') {
            const std::uint32_t lo = read_hex4(body, i + 2, base);
            if (lo < 0xDC00 || lo > 0xDFFF) {
              throw ParseError(ErrorKind::BadUnicodeEscape, base + j, "high surrogate without low surrogate");
            }
            cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
            i += 6;
          } else {
            throw ParseError(ErrorKind::BadUnicodeEscape, base + j, "lone high surrogate");
          }
        } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
          throw ParseError(ErrorKind::BadUnicodeEscape, base + j, "lone low surrogate");
        }
        append_utf8(out, cp);
        break;
      }
      default:
        throw ParseError(ErrorKind::BadEscape, base + j, std::string("unknown escape '\\") + e + "'");
    }
  }
}

class Reader {
 public:
  Reader(std::string_view in, const StructuralIndex& idx, const ParseOptions& opt, ParseTrace* trace)
      : in_(in), idx_(idx), opt_(opt), trace_(trace) {
    if (opt_.max_depth < 1) throw std::invalid_argument("ParseOptions::max_depth must be >= 1");
  }

  Value document() {
    skip_ws();
    if (pos_ >= in_.size()) throw ParseError(ErrorKind::UnexpectedChar, pos_, "empty document");
    Value v = value(0);
    skip_ws();
    if (pos_ < in_.size()) throw ParseError(ErrorKind::TrailingData, pos_, "data after the top-level value");
    return v;
  }

  Value grid_at(std::size_t start) {
    pos_ = start;
    if (pos_ >= in_.size() || in_[pos_] != '[') {
      throw ParseError(ErrorKind::UnexpectedChar, pos_, "expected '[' opening a Zen Grid");
    }
    auto header = grid_prefix(pos_ + 1);
    if (!header) throw ParseError(ErrorKind::UnexpectedChar, pos_, "not a Zen Grid table");
    consume(Structural::LBracket);
    return zen_grid(0, *header);
  }

  Value cell_token() {
    skip_ws();
    if (pos_ >= in_.size()) return Value();
    Value v = cell(0);
    skip_ws();
    if (pos_ < in_.size()) throw ParseError(ErrorKind::UnexpectedChar, pos_, "cell is not a single value");
    return v;
  }

 private:
  struct GridPrefix {
    std::optional<std::size_t> count_start;
    std::size_t count_end = 0;
  };

  bool at(char c) const noexcept { return pos_ < in_.size() && in_[pos_] == c; }

  [[noreturn]] void unexpected(const char* expected) const {
    std::string detail = "expected ";
    detail += expected;
    if (pos_ >= in_.size()) {
      detail += ", found end of input";
    } else {
      detail += ", found '";
      detail += in_[pos_];
      detail += '\'';
    }
    throw ParseError(ErrorKind::UnexpectedChar, pos_, std::move(detail));
  }

  void skip_ws() {
    const std::size_t n = in_.size();
    while (pos_ < n) {
      const char c = in_[pos_];
      if (is_ws(c)) {
        ++pos_;
      } else if (c == '/' && idx_.comment_mask.test(pos_)) {
        if (!opt_.allow_extensions) {
          throw ParseError(ErrorKind::UnexpectedChar, pos_, "comments are not allowed in strict JSON");
        }
        pos_ = idx_.comment_mask.next_clear(pos_);
      } else {
        break;
      }
    }
  }

  // Lookahead variant: no errors, no cursor movement.
  std::size_t peek_ws(std::size_t p) const noexcept {
    const std::size_t n = in_.size();
    while (p < n) {
      if (is_ws(in_[p])) {
        ++p;
      } else if (idx_.comment_mask.test(p)) {
        p = idx_.comment_mask.next_clear(p);
      } else {
        break;
      }
    }
    return p;
  }

  // Matches the structural byte at pos_ against its class cursor, then steps past it.
  void consume(Structural cls) {
    const auto c = static_cast<std::size_t>(cls);
    const auto& v = idx_.positions[c];
    std::size_t& cur = cursors_[c];
    while (cur < v.size() && v[cur] < pos_) {
      ++cur;
      if (trace_ != nullptr) ++trace_->skipped[c];
    }
    if (cur >= v.size() || v[cur] != pos_) {
      throw ParseError(ErrorKind::UnexpectedChar, pos_, "structural index does not match the input");
    }
    if (trace_ != nullptr) {
      if (trace_->consumed[c] != 0 && pos_ <= trace_->last_position[c]) ++trace_->regressions;
      trace_->last_position[c] = pos_;
      ++trace_->consumed[c];
    }
    ++cur;
    ++pos_;
  }

  void enter(std::size_t depth) const {
    if (depth > opt_.max_depth) {
      throw ParseError(ErrorKind::DepthExceeded, pos_,
                       "nesting deeper than " + std::to_string(opt_.max_depth));
    }
  }

  Value value(std::size_t depth) {
    skip_ws();
    if (pos_ >= in_.size()) unexpected("a value");
    const char c = in_[pos_];
    switch (c) {
      case '{': return object(depth + 1);
      case '[': return array_or_grid(depth + 1);
      case '"': return Value(string_token());
      default: break;
    }
    if (c == '-' || c == '+' || c == '.' || is_digit(c)) return number();
    if (is_ident_start(c)) return word(false);
    unexpected("a value");
  }

  // The two string quotes are consecutive entries of the quote vector, so
  // the closing quote is found without looking at the bytes in between.
  std::string string_token() {
    const std::size_t open = pos_;
    consume(Structural::Quote);
    const auto& quotes = idx_.positions[static_cast<std::size_t>(Structural::Quote)];
    const std::size_t close_idx = cursors_[static_cast<std::size_t>(Structural::Quote)];
    if (close_idx >= quotes.size()) {
      throw ParseError(ErrorKind::UnterminatedString, open, "string literal is never closed");
    }
    const std::size_t close = quotes[close_idx];
    std::string s = decode_string_body(in_.substr(open + 1, close - open - 1), open + 1);
    pos_ = close;
    consume(Structural::Quote);
    return s;
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < in_.size() && is_ident_char(in_[pos_])) ++pos_;
    return in_.substr(start, pos_ - start);
  }

  Value number() {
    const std::size_t start = pos_;
    const std::size_t n = in_.size();
    if (in_[pos_] == '-' && pos_ + 1 < n && is_ident_start(in_[pos_ + 1])) {
      ++pos_;
      identifier();
    } else {
      while (pos_ < n) {
        const char c = in_[pos_];
        if (is_digit(c) || c == '-' || c == '+' || c == '.' || c == 'e' || c == 'E') {
          ++pos_;
        } else {
          break;
        }
      }
    }
    const std::string_view slice = in_.substr(start, pos_ - start);
    // Overflow to +-inf is still JSON; only the literal words are extensions.
    if (!opt_.allow_extensions && slice.find_first_of("IN") != std::string_view::npos) {
      throw ParseError(ErrorKind::UnexpectedChar, start, "special numbers are not allowed in strict JSON");
    }
    return Value(parse_number(slice, start));
  }

  // Bare word: literal, special number, or (cells only) an identifier string.
  Value word(bool in_cell) {
    const std::size_t start = pos_;
    const std::string_view w = identifier();
    if (w == "true") return Value(true);
    if (w == "false") return Value(false);
    if (w == "null") return Value();
    if (w == "Infinity" || w == "NaN") {
      if (!opt_.allow_extensions) {
        throw ParseError(ErrorKind::UnexpectedChar, start, "special numbers are not allowed in strict JSON");
      }
      return Value(parse_number(w, start));
    }
    if (in_cell) return Value(std::string(w));
    if (w[0] == 'I' || w[0] == 'N') parse_number(w, start);  // throws BadNumber
    pos_ = start;
    unexpected("a value");
  }

  Value object(std::size_t depth) {
    enter(depth);
    consume(Structural::LBrace);
    Value::Object members;
    std::unordered_map<std::string, std::size_t> slots;  // only for large objects
    skip_ws();
    if (at('}')) {
      consume(Structural::RBrace);
      return Value(std::move(members));
    }
    while (true) {
      skip_ws();
      std::string key;
      if (at('"')) {
        key = string_token();
      } else if (opt_.allow_extensions && pos_ < in_.size() && is_ident_start(in_[pos_])) {
        key = std::string(identifier());
      } else {
        unexpected("an object key");
      }
      skip_ws();
      if (!at(':')) unexpected("':'");
      consume(Structural::Colon);
      Value v = value(depth);
      insert_member(members, slots, std::move(key), std::move(v));
      skip_ws();
      if (at(',')) {
        consume(Structural::Comma);
      } else if (at('}')) {
        consume(Structural::RBrace);
        return Value(std::move(members));
      } else {
        unexpected("',' or '}'");
      }
    }
  }

  // Duplicate keys: last value wins, first position is kept.
  static void insert_member(Value::Object& members, std::unordered_map<std::string, std::size_t>& slots,
                            std::string key, Value v) {
    constexpr std::size_t kLinearLimit = 24;
    if (members.size() < kLinearLimit) {
      for (auto& m : members) {
        if (m.key == key) {
          m.value = std::move(v);
          return;
        }
      }
      members.push_back(Member{std::move(key), std::move(v)});
      return;
    }
    if (slots.empty()) {
      for (std::size_t i = 0; i < members.size(); ++i) slots.emplace(members[i].key, i);
    }
    auto [it, inserted] = slots.try_emplace(key, members.size());
    if (!inserted) {
      members[it->second].value = std::move(v);
      return;
    }
    members.push_back(Member{std::move(key), std::move(v)});
  }

  // `[` optional-count `:` means Zen Grid. `p` is just past the '['.
  std::optional<GridPrefix> grid_prefix(std::size_t p) const {
    if (!opt_.allow_extensions) return std::nullopt;
    p = peek_ws(p);
    if (p < in_.size() && in_[p] == ':') return GridPrefix{};
    if (p >= in_.size() || !is_digit(in_[p])) return std::nullopt;
    const std::size_t start = p;
    while (p < in_.size() && is_digit(in_[p])) ++p;
    const std::size_t end = p;
    p = peek_ws(p);
    if (p < in_.size() && in_[p] == ':') return GridPrefix{start, end};
    return std::nullopt;
  }

  Value array_or_grid(std::size_t depth) {
    enter(depth);
    if (auto prefix = grid_prefix(pos_ + 1)) {
      consume(Structural::LBracket);
      return zen_grid(depth - 1, *prefix);
    }
    consume(Structural::LBracket);
    Value::Array items;
    skip_ws();
    if (at(']')) {
      consume(Structural::RBracket);
      return Value(std::move(items));
    }
    while (true) {
      items.push_back(value(depth));
      skip_ws();
      if (at(',')) {
        consume(Structural::Comma);
      } else if (at(']')) {
        consume(Structural::RBracket);
        return Value(std::move(items));
      } else {
        unexpected("',' or ']'");
      }
    }
  }

  // `depth` is the depth outside the grid; the table is depth+1, rows depth+2.
  Value zen_grid(std::size_t depth, const GridPrefix& prefix) {
    enter(depth + 1);
    std::optional<std::uint64_t> declared;
    skip_ws();
    if (prefix.count_start) {
      const std::size_t start = pos_;
      const std::string_view digits = in_.substr(start, prefix.count_end - start);
      if (digits.size() > 1 && digits[0] == '0') {
        throw ParseError(ErrorKind::BadNumber, start, "leading zero in row count");
      }
      std::uint64_t count = 0;
      for (char c : digits) {
        const std::uint64_t next = count * 10 + static_cast<std::uint64_t>(c - '0');
        count = next < count ? UINT64_MAX : next;
      }
      declared = count;
      pos_ = prefix.count_end;
      skip_ws();
    }
    const std::size_t count_offset = prefix.count_start.value_or(pos_);
    consume(Structural::Colon);

    std::vector<std::string> headers;
    while (true) {
      skip_ws();
      const std::size_t hpos = pos_;
      std::string h;
      if (at('"')) {
        h = string_token();
      } else if (pos_ < in_.size() && is_ident_start(in_[pos_])) {
        h = std::string(identifier());
      } else {
        unexpected("a column header");
      }
      for (const auto& existing : headers) {
        if (existing == h) throw ParseError(ErrorKind::DuplicateHeader, hpos, "duplicate column '" + h + "'");
      }
      headers.push_back(std::move(h));
      skip_ws();
      if (at(',')) {
        consume(Structural::Comma);
      } else {
        break;
      }
    }

    Value::Array rows;
    bool done = false;
    if (at(']')) {
      consume(Structural::RBracket);
      done = true;
    } else if (at(';')) {
      consume(Structural::Semicolon);
    } else {
      unexpected("',', ';' or ']' after a header");
    }

    while (!done) {
      skip_ws();
      if (at(']')) unexpected("a row (a trailing ';' is not allowed)");
      enter(depth + 2);
      Value::Object row;
      row.reserve(headers.size());
      while (true) {
        skip_ws();
        const std::size_t cpos = pos_;
        Value cell_value;
        if (!(at(',') || at(';') || at(']'))) cell_value = cell(depth + 2);
        if (row.size() >= headers.size()) {
          throw ParseError(ErrorKind::RowTooWide, cpos,
                           "row has more cells than the " + std::to_string(headers.size()) + " headers");
        }
        row.push_back(Member{headers[row.size()], std::move(cell_value)});
        skip_ws();
        if (at(',')) {
          consume(Structural::Comma);
          continue;
        }
        if (at(';')) {
          consume(Structural::Semicolon);
        } else if (at(']')) {
          consume(Structural::RBracket);
          done = true;
        } else {
          unexpected("',', ';' or ']' in a grid row");
        }
        break;
      }
      for (std::size_t i = row.size(); i < headers.size(); ++i) row.push_back(Member{headers[i], Value()});
      rows.emplace_back(std::move(row));
    }

    if (declared && opt_.zen_row_count_policy == RowCountPolicy::Strict && *declared != rows.size()) {
      throw ParseError(ErrorKind::RowCountMismatch, count_offset,
                       "declared " + std::to_string(*declared) + " rows, found " + std::to_string(rows.size()));
    }
    return Value(std::move(rows));
  }

  Value cell(std::size_t depth) {
    if (pos_ < in_.size() && is_ident_start(in_[pos_])) return word(true);
    return value(depth);
  }

  std::string_view in_;
  const StructuralIndex& idx_;
  ParseOptions opt_;
  ParseTrace* trace_;
  std::size_t pos_ = 0;
  std::array<std::size_t, kStructuralClasses> cursors_{};
};

}  // namespace detail

/// Parses a document against a prebuilt structural index.
inline Value parse_document(std::string_view input, const StructuralIndex& index,
                            const ParseOptions& options = {}, ParseTrace* trace = nullptr) {
  detail::Reader r(input, index, options, trace);
  return r.document();
}

/// Parses exactly one JTON value (surrounded only by whitespace/comments).
inline Value parse_document(std::string_view input, const ParseOptions& options = {},
                            ParseTrace* trace = nullptr) {
  const StructuralIndex index = scan_structural_accelerated(input);
  return parse_document(input, index, options, trace);
}

/// Parses the Zen Grid table whose '[' is at `start_offset`.
inline Value parse_zen_grid(std::string_view input, const StructuralIndex& index, std::size_t start_offset,
                            const ParseOptions& options = {}) {
  detail::Reader r(input, index, options, nullptr);
  return r.grid_at(start_offset);
}

/// Decodes one string literal (quotes included); nothing may follow it.
inline std::string parse_string(std::string_view literal) {
  if (literal.empty() || literal[0] != '"') {
    throw ParseError(ErrorKind::UnexpectedChar, 0, "expected '\"'");
  }
  std::size_t i = 1;
  bool escaped = false;
  for (; i < literal.size(); ++i) {
    if (escaped) {
      escaped = false;
    } else if (literal[i] == '\\') {
      escaped = true;
    } else if (literal[i] == '"') {
      break;
    }
  }
  if (i >= literal.size()) throw ParseError(ErrorKind::UnterminatedString, 0, "string literal is never closed");
  if (i + 1 != literal.size()) throw ParseError(ErrorKind::TrailingData, i + 1, "data after the string literal");
  return detail::decode_string_body(literal.substr(1, i - 1), 1);
}

/// Decodes a single grid cell with surrounding whitespace already stripped:
/// empty -> null, reserved words -> typed values, other identifiers ->
/// strings, anything else must be a complete JTON value.
inline Value decode_cell(std::string_view token, const ParseOptions& options = {}) {
  const StructuralIndex index = scan_structural_accelerated(token);
  detail::Reader r(token, index, options, nullptr);
  return r.cell_token();
}

}  // namespace jton
