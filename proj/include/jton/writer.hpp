#pragma once

// Serialization to pretty JSON, compact JSON and Zen Grid.

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "jton/error.hpp"
#include "jton/number.hpp"
#include "jton/reader.hpp"
#include "jton/value.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define JTON_HAVE_X86_ESCAPE 1
#else
#define JTON_HAVE_X86_ESCAPE 0
#endif

namespace jton {

enum class OutputMode { JsonPretty, JsonCompact, Zen };
enum class Spacing { Compact, Spaced };

struct SerializeOptions {
  OutputMode mode = OutputMode::JsonCompact;
  // The next four only affect Zen output.
  bool bare_strings = false;
  bool implicit_null = false;
  bool emit_row_count = true;
  Spacing spacing = Spacing::Compact;
  std::size_t indent = 2;  // JsonPretty only
  bool strict_json = false;
};

struct GridPlan {
  bool eligible = false;
  std::vector<std::string> headers;
};

namespace detail {

inline constexpr char kHex[] = "0123456789abcdef";

inline void append_escaped_byte(std::string& out, unsigned char c) {
  switch (c) {
    case '"': out += "\\\""; return;
    case '\\': out += "\\\\"; return;
    case '\b': out += "\\b"; return;
    case '\f': out += "\\f"; return;
    case '\n': out += "\\n"; return;
    case '\r': out += "\\r"; return;
    case '\t': out += "\\t"; return;
    default: break;
  }
  const char u[] = {'\\', 'u', '0', '0', kHex[c >> 4], kHex[c & 0xF]};
  out.append(u, sizeof u);
}

constexpr bool needs_escape(unsigned char c) noexcept { return c < 0x20 || c == '"' || c == '\\'; }

inline void escape_scalar(std::string& out, std::string_view s, std::size_t from) {
  std::size_t clean = from;
  for (std::size_t i = from; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (needs_escape(c)) {
      out.append(s.data() + clean, i - clean);
      append_escaped_byte(out, c);
      clean = i + 1;
    }
  }
  out.append(s.data() + clean, s.size() - clean);
}

#if JTON_HAVE_X86_ESCAPE
__attribute__((target("avx2"))) inline void escape_avx2(std::string& out, std::string_view s) {
  const __m256i quote = _mm256_set1_epi8('"');
  const __m256i backslash = _mm256_set1_epi8('\\');
  const __m256i ctl_max = _mm256_set1_epi8(0x1F);
  std::size_t clean = 0;
  std::size_t i = 0;
  for (; i + 32 <= s.size(); i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s.data() + i));
    const __m256i hit = _mm256_or_si256(
        _mm256_or_si256(_mm256_cmpeq_epi8(v, quote), _mm256_cmpeq_epi8(v, backslash)),
        _mm256_cmpeq_epi8(_mm256_min_epu8(v, ctl_max), v));
    auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(hit));
    while (bits != 0) {
      const std::size_t at = i + static_cast<std::size_t>(__builtin_ctz(bits));
      out.append(s.data() + clean, at - clean);
      append_escaped_byte(out, static_cast<unsigned char>(s[at]));
      clean = at + 1;
      bits &= bits - 1;
    }
  }
  out.append(s.data() + clean, i - clean);
  escape_scalar(out, s, i);
}
#endif

inline bool escape_simd_available() noexcept {
#if JTON_HAVE_X86_ESCAPE
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

}  // namespace detail

/// Appends `s` with JSON escaping (no surrounding quotes).
inline void append_escaped(std::string& out, std::string_view s) {
#if JTON_HAVE_X86_ESCAPE
  if (s.size() >= 32 && detail::escape_simd_available()) {
    detail::escape_avx2(out, s);
    return;
  }
#endif
  detail::escape_scalar(out, s, 0);
}

inline std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 8);
  append_escaped(out, s);
  return out;
}

/// Byte-at-a-time reference, kept public for differential testing.
inline std::string escape_string_scalar(std::string_view s) {
  std::string out;
  detail::escape_scalar(out, s, 0);
  return out;
}

inline bool is_reserved_word(std::string_view s) noexcept {
  return s == "true" || s == "false" || s == "null" || s == "Infinity" || s == "NaN";
}

/// True when `s` can be written as a bare grid cell and read back as the same string.
inline bool is_bare_safe(std::string_view s) {
  if (!detail::is_identifier(s) || is_reserved_word(s)) return false;
  try {
    const Value v = decode_cell(s);
    return v.is_string() && v.as_string() == s;
  } catch (const ParseError&) {
    return false;
  }
}

/// Decides whether an array is written as a Zen Grid table.
inline GridPlan plan_grid(const Value::Array& arr) {
  GridPlan plan;
  if (arr.size() < 2) return plan;
  for (const auto& e : arr) {
    if (!e.is_object()) return plan;
  }
  const auto& first = arr.front().as_object();
  if (first.empty()) return plan;

  constexpr std::size_t kLinearLimit = 16;
  std::unordered_set<std::string_view> first_keys;
  if (first.size() > kLinearLimit) {
    for (const auto& m : first) first_keys.insert(m.key);
  }
  auto in_first = [&](std::string_view key) {
    if (!first_keys.empty()) return first_keys.count(key) != 0;
    for (const auto& m : first) {
      if (m.key == key) return true;
    }
    return false;
  };

  std::size_t same = 0;
  for (const auto& e : arr) {
    const auto& obj = e.as_object();
    if (obj.size() > first.size()) return plan;
    bool ordered = obj.size() == first.size();
    for (std::size_t i = 0; ordered && i < obj.size(); ++i) ordered = obj[i].key == first[i].key;
    if (!ordered) {
      for (const auto& m : obj) {
        if (!in_first(m.key)) return plan;  // a key with no column would be lost
      }
    }
    // Keys are unique per object, so subset + equal size means equal sets.
    if (obj.size() == first.size()) ++same;
  }
  if (same * 10 < arr.size() * 7) return plan;

  plan.eligible = true;
  plan.headers.reserve(first.size());
  for (const auto& m : first) plan.headers.push_back(m.key);
  return plan;
}

namespace detail {

class Writer {
 public:
  explicit Writer(const SerializeOptions& o) : o_(o) {}

  std::string take() { return std::move(out_); }

  void value(const Value& v, std::size_t level) {
    switch (v.kind()) {
      case Value::Kind::Null: out_ += "null"; return;
      case Value::Kind::Bool: out_ += v.as_bool() ? "true" : "false"; return;
      case Value::Kind::Int: append_int(out_, v.as_int()); return;
      case Value::Kind::Float: float_value(v.as_float()); return;
      case Value::Kind::String: quoted(v.as_string()); return;
      case Value::Kind::Array: array(v.as_array(), level); return;
      case Value::Kind::Object: object(v.as_object(), level); return;
    }
  }

  void cell(const Value& v) {
    if (v.is_null()) {
      if (!o_.implicit_null) out_ += "null";
      return;
    }
    if (v.is_string() && o_.bare_strings && is_bare_safe(v.as_string())) {
      out_ += v.as_string();
      return;
    }
    value(v, 0);
  }

 private:
  bool pretty() const noexcept { return o_.mode == OutputMode::JsonPretty; }
  bool spaced() const noexcept { return o_.spacing == Spacing::Spaced; }

  void float_value(double d) {
    if (o_.strict_json && !std::isfinite(d)) {
      throw SerializeError("non-finite float cannot be written as strict JSON");
    }
    append_double(out_, d);
  }

  void quoted(std::string_view s) {
    out_ += '"';
    append_escaped(out_, s);
    out_ += '"';
  }

  void newline(std::size_t level) {
    out_ += '\n';
    out_.append(level * o_.indent, ' ');
  }

  void array(const Value::Array& a, std::size_t level) {
    if (o_.mode == OutputMode::Zen) {
      GridPlan plan = plan_grid(a);
      if (plan.eligible) {
        grid(a, plan);
        return;
      }
    }
    if (a.empty()) {
      out_ += "[]";
      return;
    }
    out_ += '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != 0) out_ += ',';
      if (pretty()) newline(level + 1);
      value(a[i], level + 1);
    }
    if (pretty()) newline(level);
    out_ += ']';
  }

  void object(const Value::Object& obj, std::size_t level) {
    if (obj.empty()) {
      out_ += "{}";
      return;
    }
    out_ += '{';
    for (std::size_t i = 0; i < obj.size(); ++i) {
      if (i != 0) out_ += ',';
      if (pretty()) newline(level + 1);
      quoted(obj[i].key);
      out_ += pretty() ? ": " : ":";
      value(obj[i].value, level + 1);
    }
    if (pretty()) newline(level);
    out_ += '}';
  }

  void header(const std::string& h) {
    if (is_identifier(h) && !is_reserved_word(h)) {
      out_ += h;
    } else {
      quoted(h);
    }
  }

  void grid(const Value::Array& rows, const GridPlan& plan) {
    const std::string_view sep = spaced() ? ", " : ",";
    const std::string_view row_sep = spaced() ? "; " : ";";
    const std::size_t k = plan.headers.size();

    out_ += '[';
    if (o_.emit_row_count) append_int(out_, static_cast<std::int64_t>(rows.size()));
    out_ += spaced() ? ": " : ":";
    for (std::size_t i = 0; i < k; ++i) {
      if (i != 0) out_ += sep;
      header(plan.headers[i]);
    }

    static const Value kNull;
    std::vector<const Value*> cells(k);
    for (const auto& row : rows) {
      out_ += row_sep;
      const auto& obj = row.as_object();
      for (std::size_t i = 0; i < k; ++i) {
        if (i < obj.size() && obj[i].key == plan.headers[i]) {
          cells[i] = &obj[i].value;
        } else {
          const Value* found = row.find(plan.headers[i]);
          cells[i] = found != nullptr ? found : &kNull;
        }
      }
      std::size_t width = k;
      if (o_.implicit_null) {
        while (width > 0 && cells[width - 1]->is_null()) --width;
        if (width == 0) {
          // An empty row would be ambiguous, so spell one null out.
          out_ += "null";
          continue;
        }
      }
      for (std::size_t i = 0; i < width; ++i) {
        if (i != 0) out_ += sep;
        cell(*cells[i]);
      }
    }
    out_ += spaced() ? " ]" : "]";
  }

  const SerializeOptions& o_;
  std::string out_;
};

}  // namespace detail

/// Serializes `v` according to `options`. Throws SerializeError when
/// strict_json is set and `v` holds a non-finite float.
inline std::string serialize(const Value& v, const SerializeOptions& options = {}) {
  detail::Writer w(options);
  w.value(v, 0);
  return w.take();
}

/// Text of a single grid cell.
inline std::string encode_cell(const Value& v, const SerializeOptions& options = {}) {
  SerializeOptions o = options;
  o.mode = OutputMode::Zen;
  detail::Writer w(o);
  w.cell(v);
  return w.take();
}

}  // namespace jton
