#include <cmath>
#include <limits>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "jton/jton.hpp"
#include "test_support.hpp"

using jton::ErrorKind;
using jton::ParseOptions;
using jton::Value;

namespace {

Value parse(std::string_view s, const ParseOptions& o = {}) { return jton::parse_document(s, o); }

Value json(std::string_view s) { return jton_test::from_nlohmann(nlohmann::json::parse(s)); }

ErrorKind parse_error(std::string_view s, const ParseOptions& o = {}, std::size_t* offset = nullptr) {
  try {
    parse(s, o);
  } catch (const jton::ParseError& e) {
    if (offset) *offset = e.offset();
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << s;
  return ErrorKind::UnexpectedChar;
}

ParseOptions strict() {
  ParseOptions o;
  o.allow_extensions = false;
  return o;
}

#define EXPECT_VALUE(text, expected_json) \
  EXPECT_TRUE(jton::values_equal(parse(text), json(expected_json), true)) << (text)

}  // namespace

TEST(Reader, EmployeeGrid) {
  EXPECT_VALUE(R"([3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ])",
               R"([{"id":1,"name":"Alice","score":95},{"id":2,"name":"Bob","score":87},{"id":3,"name":"Carol","score":92}])");
}

TEST(Reader, UnquotedKeys) { EXPECT_VALUE(R"({name: "Alice", age: 30})", R"({"name":"Alice","age":30})"); }

TEST(Reader, CommentsAndSpecials) {
  Value v = parse("// note\n[1, Infinity, NaN, -Infinity /* tail */]");
  const auto& a = v.as_array();
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0].as_int(), 1);
  EXPECT_EQ(a[1].as_float(), std::numeric_limits<double>::infinity());
  EXPECT_TRUE(std::isnan(a[2].as_float()));
  EXPECT_EQ(a[3].as_float(), -std::numeric_limits<double>::infinity());
}

TEST(Reader, TruncatedAndTrailing) {
  EXPECT_EQ(parse_error("[1,2,"), ErrorKind::UnexpectedChar);
  std::size_t off = 0;
  EXPECT_EQ(parse_error("[1] 2", {}, &off), ErrorKind::TrailingData);
  EXPECT_EQ(off, 4u);
  EXPECT_EQ(parse_error(""), ErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("  // only a comment\n"), ErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("[1,]"), ErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error(R"({"a":1,})"), ErrorKind::UnexpectedChar);
}

TEST(Reader, ZenGridBasics) {
  EXPECT_VALUE("[2: h1, h2; 1, 2; 3, 4]", R"([{"h1":1,"h2":2},{"h1":3,"h2":4}])");
  EXPECT_VALUE("[: a, b; 1]", R"([{"a":1,"b":null}])");
  EXPECT_VALUE(R"([1: a; {"x": [1,2]}])", R"([{"a":{"x":[1,2]}}])");
  EXPECT_VALUE("[2: a, b; , 2; 1]", R"([{"a":null,"b":2},{"a":1,"b":null}])");
  EXPECT_VALUE("[: a]", "[]");
  EXPECT_EQ(parse_error("[: a; ]"), ErrorKind::UnexpectedChar);
  EXPECT_VALUE("[0: a, b]", "[]");
  EXPECT_VALUE("[ /*c*/ 2 /*d*/ : a; x; y]", R"([{"a":"x"},{"a":"y"}])");
}

TEST(Reader, ZenGridCells) {
  EXPECT_VALUE("[3: v; true; null; Alice]", R"([{"v":true},{"v":null},{"v":"Alice"}])");
  EXPECT_VALUE(R"([2: "a,b", "c;d"; 1, 2; "x;y", [1,2]])", R"([{"a,b":1,"c;d":2},{"a,b":"x;y","c;d":[1,2]}])");
  EXPECT_VALUE("[1: t; [2: a, b; 1, 2; 3, 4]]", R"([{"t":[{"a":1,"b":2},{"a":3,"b":4}]}])");
  Value v = parse("[2: x; Infinity; -Infinity]");
  EXPECT_EQ(v.as_array()[1].find("x")->as_float(), -std::numeric_limits<double>::infinity());
}

TEST(Reader, ZenGridEmptyRowBetweenSemicolons) { EXPECT_VALUE("[2: a, b; ; 1, 2]", R"([{"a":null,"b":null},{"a":1,"b":2}])"); }

TEST(Reader, ZenGridErrors) {
  EXPECT_EQ(parse_error("[5: a; 1]"), ErrorKind::RowCountMismatch);
  ParseOptions lenient;
  lenient.zen_row_count_policy = jton::RowCountPolicy::Ignore;
  EXPECT_VALUE("[: a; 1]", R"([{"a":1}])");
  EXPECT_TRUE(jton::values_equal(parse("[5: a; 1]", lenient), json(R"([{"a":1}])")));
  EXPECT_EQ(parse_error("[: a, a; 1, 2]"), ErrorKind::DuplicateHeader);
  EXPECT_EQ(parse_error(R"([: a, "a"; 1, 2])"), ErrorKind::DuplicateHeader);
  EXPECT_EQ(parse_error("[: a; 1, 2]"), ErrorKind::RowTooWide);
  EXPECT_EQ(parse_error("[: a; 1;]"), ErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("[: a; 12ab]"), ErrorKind::UnexpectedChar);
  EXPECT_EQ(parse_error("[01: a; 1]"), ErrorKind::BadNumber);
}

TEST(Reader, PlainArraysAreNotGrids) {
  EXPECT_VALUE("[1, 2]", "[1,2]");
  EXPECT_VALUE(R"(["a", {"b": 1}])", R"(["a",{"b":1}])");
  EXPECT_VALUE("[]", "[]");
}

TEST(Reader, Strings) {
  EXPECT_EQ(jton::parse_string(R"("a\nb")"), "a\nb");
  EXPECT_EQ(jton::parse_string(R"("😀")"), "\xF0\x9F\x98\x80");
  EXPECT_EQ(jton::parse_string(R"("é\/")"), "\xC3\xA9/");
  EXPECT_EQ(parse_error(R"("\q")"), ErrorKind::BadEscape);
  EXPECT_EQ(parse_error(R"("\ud83d")"), ErrorKind::BadUnicodeEscape);
  EXPECT_EQ(parse_error(R"("\ude00")"), ErrorKind::BadUnicodeEscape);
  EXPECT_EQ(parse_error(R"("\u12g4")"), ErrorKind::BadUnicodeEscape);
  EXPECT_EQ(parse_error("\"a\tb\""), ErrorKind::UnexpectedChar);
}

TEST(Reader, DecodeCell) {
  EXPECT_TRUE(jton::values_equal(jton::decode_cell("Alice"), Value("Alice")));
  EXPECT_TRUE(jton::decode_cell("").is_null());
  EXPECT_TRUE(jton::decode_cell("true").is_bool());
  EXPECT_TRUE(std::isnan(jton::decode_cell("NaN").as_float()));
  EXPECT_EQ(jton::decode_cell("-Infinity").as_float(), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(jton::decode_cell("42").as_int(), 42);
  EXPECT_EQ(jton::decode_cell(R"("x y")").as_string(), "x y");
  EXPECT_THROW(jton::decode_cell("12ab"), jton::ParseError);
}

TEST(Reader, DuplicateKeysLastWins) {
  Value v = parse(R"({"a":1,"b":2,"a":3})");
  ASSERT_EQ(v.as_object().size(), 2u);
  EXPECT_EQ(v.as_object()[0].key, "a");
  EXPECT_EQ(v.find("a")->as_int(), 3);
  std::string big = "{";
  for (int i = 0; i < 40; ++i) big += "\"k" + std::to_string(i) + "\":" + std::to_string(i) + ",";
  big += "\"k3\":99}";
  Value w = parse(big);
  EXPECT_EQ(w.as_object().size(), 40u);
  EXPECT_EQ(w.find("k3")->as_int(), 99);
}

TEST(Reader, DepthLimit) {
  ParseOptions o;
  o.max_depth = 3;
  EXPECT_NO_THROW(parse("[[[1]]]", o));
  EXPECT_EQ(parse_error("[[[[1]]]]", o), ErrorKind::DepthExceeded);
  EXPECT_EQ(parse_error("[1: a; [1: b; [1]]]", o), ErrorKind::DepthExceeded);
  std::string deep(1025, '[');
  deep += std::string(1025, ']');
  EXPECT_EQ(parse_error(deep), ErrorKind::DepthExceeded);
  std::string ok(1024, '[');
  ok += std::string(1024, ']');
  EXPECT_NO_THROW(parse(ok));
}

TEST(Reader, StrictModeRejectsExtensions) {
  for (const char* s : {"{a:1}", "// c\n1", "/* c */ 1", "[NaN]", "Infinity", "-Infinity", "[: a; 1]", "[1: a; 1]"}) {
    EXPECT_THROW(parse(s, strict()), jton::ParseError) << s;
    EXPECT_NO_THROW(parse(s)) << s;
  }
  EXPECT_NO_THROW(parse(R"({"a":[1,2.5,"x",true,null]})", strict()));
}

TEST(Reader, ErrorOffsetsWithinInput) {
  for (const char* s : {"[", "{", "{\"a\"", "[1 2]", "tru", "\"abc", "/*", "[: a; 1, 2, 3]", "-", "{\"a\":}"}) {
    std::size_t off = 0;
    parse_error(s, {}, &off);
    EXPECT_LE(off, std::string_view(s).size()) << s;
  }
}

TEST(Reader, CursorsAreMonotone) {
  jton::ParseTrace trace;
  jton::parse_document(R"({"rows": [2: a, "b,c"; 1, {"x": [1, 2]}; [1: z; 3], "q"], "n": /*,*/ 1})", {}, &trace);
  EXPECT_TRUE(trace.monotone());
  std::size_t consumed = 0;
  for (auto c : trace.consumed) consumed += c;
  EXPECT_GT(consumed, 10u);
}

TEST(Reader, WhitespaceVariants) {
  EXPECT_VALUE(" \t\r\n[ 1 , 2 ]\n", "[1,2]");
  EXPECT_EQ(parse_error("\f[1]"), ErrorKind::UnexpectedChar);
}
