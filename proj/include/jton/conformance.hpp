#pragma once

// Test-vector corpus: loading, validation and execution.
//
// Layout: one directory per category under the corpus root. A vector named
// `x` is the file `x.input.jton` plus exactly one expectation file:
//   x.expect.json   strict JSON of the expected value (Accept)
//   x.reject        the expected error kind on the first line (Reject)
//   x.roundtrip     one serialize-mode label per line (RoundTrip)
// and optionally `x.options` with `key=value` parse options, one per line
// (allow_extensions, max_depth, row_count_policy).
//
// In .expect.json, non-finite floats are written {"$float":"NaN"},
// {"$float":"Infinity"} or {"$float":"-Infinity"}.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jton/error.hpp"
#include "jton/reader.hpp"
#include "jton/value.hpp"
#include "jton/writer.hpp"

namespace jton {

enum class Category { StrictJson, Extensions, ZenGrid, Numbers, Strings, Errors, Stress };

inline constexpr Category kAllCategories[] = {Category::StrictJson, Category::Extensions, Category::ZenGrid,
                                              Category::Numbers,    Category::Strings,    Category::Errors,
                                              Category::Stress};

constexpr std::string_view category_dir(Category c) noexcept {
  switch (c) {
    case Category::StrictJson: return "strict_json";
    case Category::Extensions: return "extensions";
    case Category::ZenGrid: return "zen_grid";
    case Category::Numbers: return "numbers";
    case Category::Strings: return "strings";
    case Category::Errors: return "errors";
    case Category::Stress: return "stress";
  }
  return "?";
}

inline std::optional<Category> category_from_dir(std::string_view name) noexcept {
  for (auto c : kAllCategories) {
    if (category_dir(c) == name) return c;
  }
  return std::nullopt;
}

/// Serialize-mode labels usable in .roundtrip files: `json-pretty`,
/// `json-compact`, or `zen` followed by any of `-bare`, `-implicit-null`,
/// `-spaced`, `-no-count`.
inline std::optional<SerializeOptions> serialize_options_from_label(std::string_view label) {
  SerializeOptions o;
  if (label == "json-pretty") {
    o.mode = OutputMode::JsonPretty;
    return o;
  }
  if (label == "json-compact") return o;
  if (label.substr(0, 3) != "zen") return std::nullopt;
  o.mode = OutputMode::Zen;
  std::string_view rest = label.substr(3);
  auto take = [&rest](std::string_view flag) {
    if (rest.substr(0, flag.size()) != flag) return false;
    rest.remove_prefix(flag.size());
    return true;
  };
  while (!rest.empty()) {
    if (take("-bare")) {
      o.bare_strings = true;
    } else if (take("-implicit-null")) {
      o.implicit_null = true;
    } else if (take("-spaced")) {
      o.spacing = Spacing::Spaced;
    } else if (take("-no-count")) {
      o.emit_row_count = false;
    } else {
      return std::nullopt;
    }
  }
  return o;
}

class ManifestError : public std::runtime_error {
 public:
  ManifestError(std::string file, std::size_t line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message), file_(std::move(file)), line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

struct AcceptExpectation {
  std::string expected_json;
};
struct RejectExpectation {
  ErrorKind kind;
};
struct RoundTripExpectation {
  std::vector<std::string> modes;
};
using Expectation = std::variant<AcceptExpectation, RejectExpectation, RoundTripExpectation>;

struct TestVector {
  std::string name;
  std::string input;
  Expectation expectation;
  Category category = Category::StrictJson;
  ParseOptions options;
};

struct VectorResult {
  bool pass = false;
  std::string diagnostic;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ManifestError(p.string(), 0, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::size_t line_of(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Value decode_float_sentinels(Value v) {
  if (v.is_array()) {
    for (auto& item : v.as_array()) item = decode_float_sentinels(std::move(item));
    return v;
  }
  if (v.is_object()) {
    auto& obj = v.as_object();
    if (obj.size() == 1 && obj[0].key == "$float" && obj[0].value.is_string()) {
      const std::string& s = obj[0].value.as_string();
      if (s == "NaN") return Value(std::numeric_limits<double>::quiet_NaN());
      if (s == "Infinity") return Value(std::numeric_limits<double>::infinity());
      if (s == "-Infinity") return Value(-std::numeric_limits<double>::infinity());
    }
    for (auto& m : obj) m.value = decode_float_sentinels(std::move(m.value));
  }
  return v;
}

inline ParseOptions strict_options() {
  ParseOptions o;
  o.allow_extensions = false;
  return o;
}

}  // namespace detail

/// Expected value of an Accept vector (sentinels decoded).
inline Value expected_value(const AcceptExpectation& e) {
  return detail::decode_float_sentinels(parse_document(e.expected_json, detail::strict_options()));
}

inline constexpr std::string_view kInputSuffix = ".input.jton";
inline constexpr std::string_view kExpectSuffix = ".expect.json";
inline constexpr std::string_view kRejectSuffix = ".reject";
inline constexpr std::string_view kRoundTripSuffix = ".roundtrip";
inline constexpr std::string_view kOptionsSuffix = ".options";

/// Loads every vector under `root`, sorted by category then name.
inline std::vector<TestVector> load_vectors(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw ManifestError(root.string(), 0, "corpus root is not a directory");

  struct Pending {
    std::optional<fs::path> input, expect, reject, roundtrip, options;
    Category category;
  };
  std::map<std::string, Pending> pending;

  std::vector<fs::path> dirs;
  for (const auto& e : fs::directory_iterator(root)) {
    if (e.is_directory()) dirs.push_back(e.path());
  }
  std::sort(dirs.begin(), dirs.end());

  auto ends_with = [](std::string_view s, std::string_view suffix) {
    return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
  };

  for (const auto& dir : dirs) {
    const auto category = category_from_dir(dir.filename().string());
    if (!category) throw ManifestError(dir.string(), 0, "unknown category directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const std::string fname = f.filename().string();
      if (fname.empty() || fname[0] == '.') continue;
      std::string_view suffix;
      for (auto s : {kInputSuffix, kExpectSuffix, kRejectSuffix, kRoundTripSuffix, kOptionsSuffix}) {
        if (ends_with(fname, s)) suffix = s;
      }
      if (suffix.empty()) throw ManifestError(f.string(), 0, "unrecognized file in vector directory");
      const std::string name = fname.substr(0, fname.size() - suffix.size());
      auto [it, inserted] = pending.try_emplace(name, Pending{{}, {}, {}, {}, {}, *category});
      Pending& p = it->second;
      if (!inserted && p.category != *category) {
        throw ManifestError(f.string(), 0, "duplicate vector name '" + name + "' (also in " +
                                               std::string(category_dir(p.category)) + ")");
      }
      std::optional<fs::path>* slot = nullptr;
      if (suffix == kInputSuffix) slot = &p.input;
      if (suffix == kExpectSuffix) slot = &p.expect;
      if (suffix == kRejectSuffix) slot = &p.reject;
      if (suffix == kRoundTripSuffix) slot = &p.roundtrip;
      if (suffix == kOptionsSuffix) slot = &p.options;
      *slot = f;
    }
  }

  std::vector<TestVector> out;
  out.reserve(pending.size());
  for (auto& [name, p] : pending) {
    const int expectations = int(p.expect.has_value()) + int(p.reject.has_value()) + int(p.roundtrip.has_value());
    const fs::path any = p.input ? *p.input : p.expect ? *p.expect : p.reject ? *p.reject : p.roundtrip ? *p.roundtrip : *p.options;
    if (!p.input) throw ManifestError(any.string(), 0, "vector '" + name + "' has no input file");
    if (expectations != 1) {
      throw ManifestError(p.input->string(), 0,
                          "vector '" + name + "' needs exactly one of .expect.json, .reject, .roundtrip");
    }
    TestVector v;
    v.name = name;
    v.category = p.category;
    v.input = detail::read_file(*p.input);

    if (p.options) {
      const std::string text = detail::read_file(*p.options);
      const auto lines = detail::lines_of(text);
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = detail::trim(lines[i]);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ManifestError(p.options->string(), i + 1, "expected key=value");
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view val = detail::trim(line.substr(eq + 1));
        if (key == "allow_extensions" && (val == "true" || val == "false")) {
          v.options.allow_extensions = val == "true";
        } else if (key == "row_count_policy" && (val == "strict" || val == "ignore")) {
          v.options.zen_row_count_policy = val == "strict" ? RowCountPolicy::Strict : RowCountPolicy::Ignore;
        } else if (key == "max_depth") {
          std::size_t depth = 0;
          const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), depth);
          if (ec != std::errc() || ptr != val.data() + val.size() || depth < 1) {
            throw ManifestError(p.options->string(), i + 1, "max_depth must be a positive integer");
          }
          v.options.max_depth = depth;
        } else {
          throw ManifestError(p.options->string(), i + 1, "unknown option '" + std::string(line) + "'");
        }
      }
    }

    if (p.expect) {
      AcceptExpectation e{detail::read_file(*p.expect)};
      try {
        (void)expected_value(e);
      } catch (const ParseError& err) {
        throw ManifestError(p.expect->string(), detail::line_of(e.expected_json, err.offset()),
                            std::string("expectation is not strict JSON: ") + err.what());
      }
      v.expectation = std::move(e);
    } else if (p.reject) {
      const auto lines = detail::lines_of(detail::read_file(*p.reject));
      const std::string_view kind_name = lines.empty() ? std::string_view() : detail::trim(lines[0]);
      const auto kind = error_kind_from_name(kind_name);
      if (!kind) throw ManifestError(p.reject->string(), 1, "unknown error kind '" + std::string(kind_name) + "'");
      v.expectation = RejectExpectation{*kind};
    } else {
      const auto lines = detail::lines_of(detail::read_file(*p.roundtrip));
      RoundTripExpectation rt;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view label = detail::trim(lines[i]);
        if (label.empty()) continue;
        if (!serialize_options_from_label(label)) {
          throw ManifestError(p.roundtrip->string(), i + 1, "unknown mode label '" + std::string(label) + "'");
        }
        rt.modes.emplace_back(label);
      }
      if (rt.modes.empty()) throw ManifestError(p.roundtrip->string(), 1, "no mode labels");
      v.expectation = std::move(rt);
    }
    out.push_back(std::move(v));
  }

  std::stable_sort(out.begin(), out.end(), [](const TestVector& a, const TestVector& b) {
    if (a.category != b.category) return a.category < b.category;
    return a.name < b.name;
  });
  return out;
}

namespace detail {

inline std::string describe(const Value& v) {
  std::string s = serialize(v);
  if (s.size() > 120) {
    s.resize(117);
    s += "...";
  }
  return s;
}

inline std::optional<std::string> check_round_trip(const Value& v, const std::string& label) {
  const auto opts = serialize_options_from_label(label);
  if (!opts) return "unknown mode label '" + label + "'";
  std::string text;
  try {
    text = serialize(v, *opts);
  } catch (const std::exception& e) {
    return label + ": serialize failed: " + e.what();
  }
  try {
    const Value back = parse_document(text);
    if (!values_equal(v, back, true)) return label + ": reparsed value differs: " + describe(back);
  } catch (const ParseError& e) {
    return label + ": output does not reparse: " + e.what();
  }
  return std::nullopt;
}

}  // namespace detail

inline VectorResult run_vector(const TestVector& v) {
  VectorResult r;
  Value parsed;
  std::optional<ParseError> error;
  try {
    parsed = parse_document(v.input, v.options);
  } catch (const ParseError& e) {
    error = e;
  }

  if (const auto* rej = std::get_if<RejectExpectation>(&v.expectation)) {
    if (!error) {
      r.diagnostic = "expected " + std::string(error_kind_name(rej->kind)) + ", parsed " + detail::describe(parsed);
    } else if (error->kind() != rej->kind) {
      r.diagnostic = "expected " + std::string(error_kind_name(rej->kind)) + ", got " + error->what();
    } else {
      r.pass = true;
    }
    return r;
  }

  if (error) {
    r.diagnostic = std::string("unexpected error: ") + error->what();
    return r;
  }

  if (const auto* acc = std::get_if<AcceptExpectation>(&v.expectation)) {
    const Value expected = expected_value(*acc);
    if (!values_equal(expected, parsed, true)) {
      r.diagnostic = "expected " + detail::describe(expected) + ", parsed " + detail::describe(parsed);
      return r;
    }
    // Every accepted value must also survive a compact JSON round trip.
    if (auto why = detail::check_round_trip(parsed, "json-compact")) {
      r.diagnostic = *why;
      return r;
    }
    r.pass = true;
    return r;
  }

  const auto& rt = std::get<RoundTripExpectation>(v.expectation);
  for (const auto& label : rt.modes) {
    if (auto why = detail::check_round_trip(parsed, label)) {
      r.diagnostic = *why;
      return r;
    }
  }
  r.pass = true;
  return r;
}

/// Runs every vector and prints a TAP stream. Returns the failure count.
inline std::size_t run_corpus(const std::vector<TestVector>& vectors, std::ostream& out) {
  std::size_t failures = 0;
  out << "1.." << vectors.size() << '\n';
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const VectorResult r = run_vector(vectors[i]);
    const std::string name = std::string(category_dir(vectors[i].category)) + "/" + vectors[i].name;
    if (r.pass) {
      out << "ok " << (i + 1) << " - " << name << '\n';
    } else {
      ++failures;
      out << "not ok " << (i + 1) << " - " << name << '\n';
      out << "# " << r.diagnostic << '\n';
    }
  }
  return failures;
}

}  // namespace jton
