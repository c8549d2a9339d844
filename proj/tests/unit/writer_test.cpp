#include <cmath>
#include <limits>
#include <string>

#include <gtest/gtest.h>

#include "jton/jton.hpp"
#include "test_support.hpp"

using jton::OutputMode;
using jton::SerializeOptions;
using jton::Spacing;
using jton::Value;

namespace {

Value listing_rows() {
  auto row = [](int id, const char* name, int score) {
    return Value(Value::Object{{"id", Value(id)}, {"name", Value(name)}, {"score", Value(score)}});
  };
  return Value(Value::Array{row(1, "Alice", 95), row(2, "Bob", 87), row(3, "Carol", 92)});
}

SerializeOptions zen(Spacing s = Spacing::Compact) {
  SerializeOptions o;
  o.mode = OutputMode::Zen;
  o.spacing = s;
  return o;
}

Value obj(std::initializer_list<std::pair<const char*, Value>> kv) {
  Value::Object o;
  for (const auto& [k, v] : kv) o.push_back({k, v});
  return Value(std::move(o));
}

}  // namespace

TEST(Writer, EmployeeExampleForms) {
  const Value rows = listing_rows();
  EXPECT_EQ(jton::serialize(rows),
            R"([{"id":1,"name":"Alice","score":95},{"id":2,"name":"Bob","score":87},{"id":3,"name":"Carol","score":92}])");
  const std::string spaced = jton::serialize(rows, zen(Spacing::Spaced));
  EXPECT_EQ(spaced, R"([3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ])");
  EXPECT_EQ(spaced.size(), 67u);
  EXPECT_EQ(jton::serialize(rows, zen()), R"([3:id,name,score;1,"Alice",95;2,"Bob",87;3,"Carol",92])");
  EXPECT_TRUE(jton::values_equal(jton::parse_document(spaced), rows));
}

TEST(Writer, Scalars) {
  for (auto mode : {OutputMode::JsonPretty, OutputMode::JsonCompact, OutputMode::Zen}) {
    SerializeOptions o;
    o.mode = mode;
    EXPECT_EQ(jton::serialize(Value(), o), "null");
  }
  EXPECT_EQ(jton::serialize(Value(std::numeric_limits<double>::infinity())), "Infinity");
  EXPECT_EQ(jton::serialize(Value(-std::numeric_limits<double>::infinity())), "-Infinity");
  EXPECT_EQ(jton::serialize(Value(std::numeric_limits<double>::quiet_NaN())), "NaN");
  EXPECT_EQ(jton::serialize(Value(0.5)), "0.5");
  EXPECT_EQ(jton::serialize(Value(true)), "true");
}

TEST(Writer, StrictJsonRejectsNonFinite) {
  SerializeOptions o;
  o.strict_json = true;
  EXPECT_THROW(jton::serialize(Value(Value::Array{Value(std::nan(""))}), o), jton::SerializeError);
  EXPECT_NO_THROW(jton::serialize(Value(1.5), o));
}

TEST(Writer, Pretty) {
  SerializeOptions o;
  o.mode = OutputMode::JsonPretty;
  EXPECT_EQ(jton::serialize(obj({{"a", Value(Value::Array{Value(1), Value(2)})}, {"b", Value(Value::Object{})}}), o),
            "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": {}\n}");
  o.indent = 0;
  EXPECT_EQ(jton::serialize(Value(Value::Array{Value(1)}), o), "[\n1\n]");
}

TEST(Writer, PlanGrid) {
  const Value rows = listing_rows();
  auto plan = jton::plan_grid(rows.as_array());
  EXPECT_TRUE(plan.eligible);
  EXPECT_EQ(plan.headers, (std::vector<std::string>{"id", "name", "score"}));

  EXPECT_FALSE(jton::plan_grid(Value::Array{obj({{"a", Value(1)}})}).eligible);
  EXPECT_FALSE(jton::plan_grid(Value::Array{obj({{"a", Value(1)}}), Value(2)}).eligible);

  Value::Array seventy;
  for (int i = 0; i < 7; ++i) seventy.push_back(obj({{"a", Value(i)}, {"b", Value(i)}}));
  for (int i = 0; i < 3; ++i) seventy.push_back(obj({{"a", Value(i)}}));
  EXPECT_TRUE(jton::plan_grid(seventy).eligible);
  seventy[6] = obj({{"a", Value(6)}});
  EXPECT_FALSE(jton::plan_grid(seventy).eligible);

  Value::Array extra;
  for (int i = 0; i < 9; ++i) extra.push_back(obj({{"a", Value(i)}}));
  extra.push_back(obj({{"a", Value(9)}, {"z", Value(0)}}));
  EXPECT_FALSE(jton::plan_grid(extra).eligible);

  EXPECT_FALSE(jton::plan_grid(Value::Array{Value(Value::Object{}), Value(Value::Object{})}).eligible);
}

TEST(Writer, SubsetRowsGetEmptyOrNullCells) {
  Value::Array rows;
  for (int i = 0; i < 3; ++i) rows.push_back(obj({{"a", Value(i)}, {"b", Value("x")}}));
  rows.push_back(obj({{"b", Value("y")}}));
  EXPECT_EQ(jton::serialize(Value(rows), zen()), R"([4:a,b;0,"x";1,"x";2,"x";null,"y"])");
  auto o = zen();
  o.implicit_null = true;
  EXPECT_EQ(jton::serialize(Value(rows), o), R"([4:a,b;0,"x";1,"x";2,"x";,"y"])");
}

TEST(Writer, ImplicitNullTruncation) {
  Value rows(Value::Array{obj({{"a", Value(1)}, {"b", Value()}, {"c", Value()}}),
                          obj({{"a", Value()}, {"b", Value()}, {"c", Value()}}),
                          obj({{"a", Value()}, {"b", Value(2)}, {"c", Value()}})});
  auto o = zen();
  o.implicit_null = true;
  const std::string text = jton::serialize(rows, o);
  EXPECT_EQ(text, "[3:a,b,c;1;null;,2]");
  EXPECT_TRUE(jton::values_equal(jton::parse_document(text), rows));
}

TEST(Writer, BareStrings) {
  auto o = zen();
  o.bare_strings = true;
  Value rows(Value::Array{obj({{"n", Value("Alice")}}), obj({{"n", Value("true")}}), obj({{"n", Value("a b")}}),
                          obj({{"n", Value("")}})});
  EXPECT_EQ(jton::serialize(rows, o), R"([4:n;Alice;"true";"a b";""])");
}

TEST(Writer, EncodeCell) {
  auto o = zen();
  o.bare_strings = true;
  EXPECT_EQ(jton::encode_cell(Value("Alice"), o), "Alice");
  EXPECT_EQ(jton::encode_cell(Value("true"), o), "\"true\"");
  o.implicit_null = true;
  EXPECT_EQ(jton::encode_cell(Value(), o), "");
  o.implicit_null = false;
  EXPECT_EQ(jton::encode_cell(Value(), o), "null");
}

TEST(Writer, IsBareSafe) {
  EXPECT_TRUE(jton::is_bare_safe("Alice"));
  EXPECT_TRUE(jton::is_bare_safe("_x9"));
  EXPECT_FALSE(jton::is_bare_safe(""));
  for (const char* w : {"NaN", "Infinity", "true", "false", "null", "9a", "a-b", "é"}) {
    EXPECT_FALSE(jton::is_bare_safe(w)) << w;
  }
}

TEST(Writer, HeadersQuotedWhenNeeded) {
  Value rows(Value::Array{obj({{"a b", Value(1)}, {"ok", Value(2)}}), obj({{"a b", Value(3)}, {"ok", Value(4)}})});
  EXPECT_EQ(jton::serialize(rows, zen()), R"([2:"a b",ok;1,2;3,4])");
  Value reserved(Value::Array{obj({{"null", Value(1)}}), obj({{"null", Value(2)}})});
  EXPECT_EQ(jton::serialize(reserved, zen()), R"([2:"null";1;2])");
  EXPECT_TRUE(jton::values_equal(jton::parse_document(jton::serialize(reserved, zen())), reserved));
}

TEST(Writer, NoRowCount) {
  auto o = zen(Spacing::Spaced);
  o.emit_row_count = false;
  EXPECT_EQ(jton::serialize(listing_rows(), o), R"([: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ])");
}

TEST(Writer, NestedGrids) {
  Value inner(Value::Array{obj({{"x", Value(1)}}), obj({{"x", Value(2)}})});
  Value outer(Value::Array{obj({{"t", inner}}), obj({{"t", inner}})});
  const std::string text = jton::serialize(Value(Value::Object{{"o", outer}}), zen());
  EXPECT_EQ(text, R"({"o":[2:t;[2:x;1;2];[2:x;1;2]]})");
  EXPECT_TRUE(jton::values_equal(jton::parse_document(text), Value(Value::Object{{"o", outer}})));
}

TEST(Writer, EscapeString) {
  EXPECT_EQ(jton::escape_string("ab"), "ab");
  EXPECT_EQ(jton::escape_string("a\"b\\"), "a\\\"b\\\\");
  EXPECT_EQ(jton::escape_string("\x07"), "\\u0007");
  EXPECT_EQ(jton::escape_string("\n\t\r\b\f"), "\\n\\t\\r\\b\\f");
  EXPECT_EQ(jton::escape_string("\x7f/é"), "\x7f/é");
}

TEST(Writer, EscapeBulkMatchesScalar) {
  jton_test::ValueGen gen(3);
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const std::size_t parts = 1 + gen.below(8);
    for (std::size_t p = 0; p < parts; ++p) s += gen.string();
    if (gen.chance(0.5)) s += std::string(gen.below(100), 'z');
    ASSERT_EQ(jton::escape_string(s), jton::escape_string_scalar(s));
  }
}

TEST(Writer, ModeAgnosticSemantics) {
  jton_test::ValueGen gen(11);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Value v = gen.value();
    if (jton_test::has_incomplete_grid(v)) continue;
    const Value a = jton::parse_document(jton::serialize(v, zen()));
    const Value b = jton::parse_document(jton::serialize(v));
    ASSERT_TRUE(jton::values_equal(a, b, true)) << jton::serialize(v);
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(Writer, ZenShrinksEligibleArrays) {
  for (std::size_t n = 2; n < 50; n += 7) {
    const Value v = jton::generate_dataset({jton::DatasetShape::Employees, n, 0});
    EXPECT_LT(jton::serialize(v, zen()).size(), jton::serialize(v).size());
    EXPECT_EQ(jton::serialize(v).size() - jton::serialize(v, zen()).size(),
              static_cast<std::size_t>(jton::predicted_byte_savings(n, {"id", "name", "dept", "salary"})));
  }
}
