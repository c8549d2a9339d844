#pragma once

// Document value model shared by the reader, the writer and the harnesses.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jton {

/// Result of number parsing: integers that fit in 64 bits stay integral,
/// everything else (fractions, exponents, specials, overflow) is binary64.
using Number = std::variant<std::int64_t, double>;

struct Member;

class Value {
 public:
  enum class Kind : std::uint8_t { Null, Bool, Int, Float, String, Array, Object };

  using Array = std::vector<Value>;
  // Insertion-ordered; duplicate keys are collapsed by the reader before
  // an Object is built.
  using Object = std::vector<Member>;

  Value() noexcept = default;
  Value(std::nullptr_t) noexcept {}
  Value(bool b) noexcept : data_(b) {}
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Value(T i) noexcept : data_(static_cast<std::int64_t>(i)) {}
  Value(double d) noexcept : data_(d) {}
  Value(std::string s) noexcept : data_(std::move(s)) {}
  Value(std::string_view s) : data_(std::string(s)) {}
  Value(const char* s) : data_(std::string(s)) {}
  Value(Array a) noexcept : data_(std::move(a)) {}
  Value(Object o) noexcept : data_(std::move(o)) {}
  Value(const Number& n) noexcept {
    if (const auto* i = std::get_if<std::int64_t>(&n)) {
      data_ = *i;
    } else {
      data_ = std::get<double>(n);
    }
  }

  Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }

  bool is_null() const noexcept { return kind() == Kind::Null; }
  bool is_bool() const noexcept { return kind() == Kind::Bool; }
  bool is_int() const noexcept { return kind() == Kind::Int; }
  bool is_float() const noexcept { return kind() == Kind::Float; }
  bool is_number() const noexcept { return is_int() || is_float(); }
  bool is_string() const noexcept { return kind() == Kind::String; }
  bool is_array() const noexcept { return kind() == Kind::Array; }
  bool is_object() const noexcept { return kind() == Kind::Object; }
  bool is_container() const noexcept { return is_array() || is_object(); }

  // Checked accessors; throw std::bad_variant_access on a kind mismatch.
  bool as_bool() const { return std::get<bool>(data_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  double as_float() const { return std::get<double>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const Array& as_array() const { return std::get<Array>(data_); }
  Array& as_array() { return std::get<Array>(data_); }
  const Object& as_object() const { return std::get<Object>(data_); }
  Object& as_object() { return std::get<Object>(data_); }

  /// Int or Float widened to double.
  double as_number() const { return is_int() ? static_cast<double>(as_int()) : as_float(); }

  /// Member lookup by key; nullptr when absent or when this is not an object.
  const Value* find(std::string_view key) const noexcept;

 private:
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> data_{nullptr};
};

struct Member {
  std::string key;
  Value value;
};

inline const Value* Value::find(std::string_view key) const noexcept {
  const auto* obj = std::get_if<Object>(&data_);
  if (obj == nullptr) return nullptr;
  for (const auto& m : *obj) {
    if (m.key == key) return &m.value;
  }
  return nullptr;
}

/// Deep structural equality.
///
/// Objects compare as key -> value maps (member order is ignored).
/// With `nan_equal`, Float(NaN) equals Float(NaN). Int and Float never
/// compare equal unless `numeric_coercion` is set, in which case 1 == 1.0.
inline bool values_equal(const Value& a, const Value& b, bool nan_equal = false,
                         bool numeric_coercion = false) {
  using K = Value::Kind;
  if (a.kind() != b.kind()) {
    if (numeric_coercion && a.is_number() && b.is_number()) {
      return a.as_number() == b.as_number();
    }
    return false;
  }
  switch (a.kind()) {
    case K::Null:
      return true;
    case K::Bool:
      return a.as_bool() == b.as_bool();
    case K::Int:
      return a.as_int() == b.as_int();
    case K::Float: {
      const double x = a.as_float();
      const double y = b.as_float();
      if (std::isnan(x) || std::isnan(y)) return nan_equal && std::isnan(x) && std::isnan(y);
      return x == y;
    }
    case K::String:
      return a.as_string() == b.as_string();
    case K::Array: {
      const auto& xs = a.as_array();
      const auto& ys = b.as_array();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!values_equal(xs[i], ys[i], nan_equal, numeric_coercion)) return false;
      }
      return true;
    }
    case K::Object: {
      const auto& xs = a.as_object();
      const auto& ys = b.as_object();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        // Same-order fast path, then keyed lookup.
        const Value* other = (ys[i].key == xs[i].key) ? &ys[i].value : b.find(xs[i].key);
        if (other == nullptr || !values_equal(xs[i].value, *other, nan_equal, numeric_coercion)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

/// 0 for scalars, 1 + deepest child for containers (empty containers are 1).
inline std::size_t depth_of(const Value& v) {
  std::size_t deepest = 0;
  if (v.is_array()) {
    for (const auto& item : v.as_array()) deepest = std::max(deepest, depth_of(item));
    return deepest + 1;
  }
  if (v.is_object()) {
    for (const auto& m : v.as_object()) deepest = std::max(deepest, depth_of(m.value));
    return deepest + 1;
  }
  return 0;
}

inline std::string_view kind_name(Value::Kind k) noexcept {
  switch (k) {
    case Value::Kind::Null: return "null";
    case Value::Kind::Bool: return "bool";
    case Value::Kind::Int: return "int";
    case Value::Kind::Float: return "float";
    case Value::Kind::String: return "string";
    case Value::Kind::Array: return "array";
    case Value::Kind::Object: return "object";
  }
  return "?";
}

}  // namespace jton
