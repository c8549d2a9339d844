#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jton {

enum class ErrorKind {
  UnexpectedChar,
  UnterminatedString,
  UnterminatedComment,
  BadNumber,
  BadEscape,
  DepthExceeded,
  DuplicateHeader,
  RowTooWide,
  RowCountMismatch,
  TrailingData,
  BadUnicodeEscape,
};

inline constexpr ErrorKind kAllErrorKinds[] = {
    ErrorKind::UnexpectedChar,   ErrorKind::UnterminatedString, ErrorKind::UnterminatedComment,
    ErrorKind::BadNumber,        ErrorKind::BadEscape,          ErrorKind::DepthExceeded,
    ErrorKind::DuplicateHeader,  ErrorKind::RowTooWide,         ErrorKind::RowCountMismatch,
    ErrorKind::TrailingData,     ErrorKind::BadUnicodeEscape,
};

constexpr std::string_view error_kind_name(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::UnexpectedChar: return "UnexpectedChar";
    case ErrorKind::UnterminatedString: return "UnterminatedString";
    case ErrorKind::UnterminatedComment: return "UnterminatedComment";
    case ErrorKind::BadNumber: return "BadNumber";
    case ErrorKind::BadEscape: return "BadEscape";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::DuplicateHeader: return "DuplicateHeader";
    case ErrorKind::RowTooWide: return "RowTooWide";
    case ErrorKind::RowCountMismatch: return "RowCountMismatch";
    case ErrorKind::TrailingData: return "TrailingData";
    case ErrorKind::BadUnicodeEscape: return "BadUnicodeEscape";
  }
  return "Unknown";
}

inline std::optional<ErrorKind> error_kind_from_name(std::string_view name) noexcept {
  for (auto k : kAllErrorKinds) {
    if (error_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

/// Raised by the scanner and the reader. what() renders as
/// `<kind> at byte <offset>: <detail>`.
class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, std::string detail)
      : std::runtime_error(render(kind, offset, detail)),
        kind_(kind),
        offset_(offset),
        detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string render(ErrorKind kind, std::size_t offset, const std::string& detail) {
    std::string out(error_kind_name(kind));
    out += " at byte ";
    out += std::to_string(offset);
    out += ": ";
    out += detail;
    return out;
  }

  ErrorKind kind_;
  std::size_t offset_;
  std::string detail_;
};

/// Raised by the writer when `strict_json` forbids a non-finite float.
class SerializeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jton
