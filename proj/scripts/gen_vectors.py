#!/usr/bin/env python3
"""Regenerates the conformance corpus under tests/vectors/.

Expected values are written as Python objects and serialized with the
standard json module, so expectations never come from the library under
test. Zen Grid expectations are spelled out as the equivalent list of
dicts. Run from the repository root:

    python3 scripts/gen_vectors.py
"""

import json
import math
import pathlib
import shutil
import sys

sys.setrecursionlimit(20000)

ROOT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "vectors"

INF = float("inf")
NAN = float("nan")

ALL_MODES = [
    "json-pretty",
    "json-compact",
    "zen",
    "zen-spaced",
    "zen-bare",
    "zen-implicit-null",
    "zen-bare-implicit-null",
    "zen-no-count",
    "zen-bare-implicit-null-spaced-no-count",
]

vectors = {}


def sentinel(v):
    if isinstance(v, float) and not math.isfinite(v):
        if math.isnan(v):
            return {"$float": "NaN"}
        return {"$float": "Infinity" if v > 0 else "-Infinity"}
    if isinstance(v, list):
        return [sentinel(x) for x in v]
    if isinstance(v, dict):
        return {k: sentinel(x) for k, x in v.items()}
    return v


def add(category, name, text, files):
    if name in vectors:
        sys.exit(f"duplicate vector name {name}")
    data = text.encode("utf-8") if isinstance(text, str) else text
    vectors[name] = (category, data, files)


def accept(category, name, text, expected, options=None):
    files = {".expect.json": json.dumps(sentinel(expected), ensure_ascii=False, allow_nan=False) + "\n"}
    if options:
        files[".options"] = options
    add(category, name, text, files)


def reject(category, name, text, kind, options=None):
    files = {".reject": kind + "\n"}
    if options:
        files[".options"] = options
    add(category, name, text, files)


def roundtrip(category, name, text, modes=None):
    add(category, name, text, {".roundtrip": "\n".join(modes or ALL_MODES) + "\n"})


STRICT_OFF = "allow_extensions=false\n"

# ---------------------------------------------------------------- strict_json
samples = {
    "null": None,
    "true": True,
    "false": False,
    "zero": 0,
    "string": "hello",
    "empty_array": [],
    "empty_object": {},
    "nested_empty": [[], {}, [[]], {"a": {}}],
    "flat_array": [1, 2, 3, 4, 5],
    "mixed_array": [1, -2.5, "x", True, False, None, [], {}],
    "object": {"name": "Alice", "age": 30, "admin": False},
    "nested": {"a": {"b": {"c": [1, {"d": [2, 3]}]}}},
    "unicode": {"greeting": "héllo wörld", "cjk": "漢字", "emoji": "\U0001F600"},
    "escapes": {"s": "quote\" back\\ slash/ nl\n tab\t cr\r bs\b ff\f"},
    "control": "\u0001\u001f\u0000",
    "records": [{"id": i, "name": n, "ok": i % 2 == 0} for i, n in enumerate(["ann", "bob", "cy", "di"])],
    "floats": [0.1, 1.5e300, -2.25e-10, 3.0, 1e21, 123456.789],
    "big_ints": [9223372036854775807, -9223372036854775808, 4294967296],
    "keys_with_symbols": {"a,b": 1, "c;d": 2, "e:f": 3, "[g]": 4, "{h}": 5, "\"i\"": 6, "/*j*/": 7},
    "deep": [[[[[[[[[[["deep"]]]]]]]]]]],
    "strings_like_literals": ["true", "null", "NaN", "Infinity", "1", ""],
    "slashes": ["//not a comment", "/*not a comment*/", "a/b"],
    "long_string": "x" * 300 + "\"" + "y" * 70,
}
styles = {
    "compact": dict(separators=(",", ":"), ensure_ascii=False),
    "default": dict(ensure_ascii=False),
    "indent2": dict(indent=2, ensure_ascii=False),
    "ascii": dict(ensure_ascii=True),
}
for sname, value in samples.items():
    for style, kw in styles.items():
        if style in ("default", "ascii") and not isinstance(value, (list, dict, str)):
            continue
        accept("strict_json", f"json_{sname}_{style}", json.dumps(value, **kw), value)
# Strict mode accepts the same documents.
for sname in ["object", "nested", "unicode", "records", "floats", "slashes"]:
    value = samples[sname]
    accept("strict_json", f"json_{sname}_strict_mode", json.dumps(value), value, STRICT_OFF)
accept("strict_json", "json_whitespace_everywhere", ' \n\t{ "a" :\r\n [ 1 , 2 ] , "b" : null }\n ',
       {"a": [1, 2], "b": None})
accept("strict_json", "json_duplicate_key_last_wins", '{"a":1,"b":2,"a":3}', {"a": 3, "b": 2})
accept("strict_json", "json_top_level_number", " 42 ", 42)
accept("strict_json", "json_top_level_string", '"just a string"', "just a string")
accept("strict_json", "json_array_with_colon_in_string", '["1:", "a:b"]', ["1:", "a:b"])
accept("strict_json", "json_array_of_arrays_leading_int", "[[1], 2]", [[1], 2])
accept("strict_json", "json_array_leading_int_not_grid", "[3, 4]", [3, 4])
for sname in ["records", "nested", "mixed_array", "unicode", "escapes", "big_ints"]:
    roundtrip("strict_json", f"json_{sname}_roundtrip", json.dumps(samples[sname]))

# ---------------------------------------------------------------- extensions
accept("extensions", "ext_line_comment_before", "// note\n[1, Infinity, NaN]", [1, INF, NAN])
accept("extensions", "ext_line_comment_after", "[1, 2] // trailing", [1, 2])
accept("extensions", "ext_line_comment_crlf", "{\r\n  // c\r\n  \"a\": 1\r\n}", {"a": 1})
accept("extensions", "ext_block_comment", "/* lead */ {\"a\": /* mid */ 1 /* tail */}", {"a": 1})
accept("extensions", "ext_block_comment_multiline", "[\n/*\n  many\n  lines\n*/ 1]", [1])
accept("extensions", "ext_comment_with_structurals", "/* { } [ ] : ; , \" */ [1, /* ,,, */ 2]", [1, 2])
accept("extensions", "ext_comment_with_quotes", "// \"unbalanced\n\"ok\"", "ok")
accept("extensions", "ext_comment_star_slash_in_line", "// */ not the end\n1", 1)
accept("extensions", "ext_block_with_slashes", "/* // still block */ 2", 2)
accept("extensions", "ext_block_stars", "/*** x ***/ 3", 3)
accept("extensions", "ext_adjacent_comments", "/*a*//*b*/// c\n4", 4)
accept("extensions", "ext_comment_only_whitespace_doc", "  /* c */  true  // end", True)
accept("extensions", "ext_comment_at_eof_no_newline", "null//", None)
accept("extensions", "ext_string_with_comment_text", "[\"/* no */\", \"// no\"]", ["/* no */", "// no"])
accept("extensions", "ext_unquoted_keys", "{name: \"Alice\", age: 30}", {"name": "Alice", "age": 30})
accept("extensions", "ext_unquoted_keys_underscore_digits", "{_a: 1, b2: 2, C_3d: 3}", {"_a": 1, "b2": 2, "C_3d": 3})
accept("extensions", "ext_unquoted_reserved_key", "{true: 1, null: 2, NaN: 3}", {"true": 1, "null": 2, "NaN": 3})
accept("extensions", "ext_mixed_keys", "{a: 1, \"b c\": 2}", {"a": 1, "b c": 2})
accept("extensions", "ext_unquoted_nested", "{outer: {inner: [1, {x: null}]}}", {"outer": {"inner": [1, {"x": None}]}})
accept("extensions", "ext_special_numbers", "[Infinity, -Infinity, NaN]", [INF, -INF, NAN])
accept("extensions", "ext_top_infinity", "Infinity", INF)
accept("extensions", "ext_top_neg_infinity", "-Infinity", -INF)
accept("extensions", "ext_top_nan", "NaN", NAN)
accept("extensions", "ext_special_in_object", "{a: NaN, b: -Infinity}", {"a": NAN, "b": -INF})
accept("extensions", "ext_overflow_to_infinity", "[1e400, -1e400]", [INF, -INF])
accept("extensions", "ext_all_features", "// all\n{rows: [2: a, b; 1, x; NaN, \"y\"], /* c */ n: -Infinity}",
       {"rows": [{"a": 1, "b": "x"}, {"a": NAN, "b": "y"}], "n": -INF})
reject("extensions", "ext_strict_rejects_line_comment", "// c\n1", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_strict_rejects_block_comment", "[1 /* c */]", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_strict_rejects_unquoted_key", "{a: 1}", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_strict_rejects_infinity", "[Infinity]", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_strict_rejects_neg_infinity", "-Infinity", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_strict_rejects_nan", "NaN", "UnexpectedChar", STRICT_OFF)
accept("extensions", "ext_strict_overflow_is_json", "[1e400, -1e400]", [INF, -INF], STRICT_OFF)
reject("extensions", "ext_strict_rejects_grid", "[: a; 1]", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_strict_rejects_counted_grid", "[1: a; 1]", "UnexpectedChar", STRICT_OFF)
reject("extensions", "ext_unquoted_value_rejected", "{a: b}", "UnexpectedChar")
reject("extensions", "ext_unquoted_key_digit_start", "{1a: 2}", "UnexpectedChar")
reject("extensions", "ext_single_quotes_rejected", "['a']", "UnexpectedChar")
reject("extensions", "ext_trailing_comma_array", "[1, 2,]", "UnexpectedChar")
reject("extensions", "ext_trailing_comma_object", "{a: 1,}", "UnexpectedChar")
reject("extensions", "ext_lone_slash", "[1 / 2]", "UnexpectedChar")
roundtrip("extensions", "ext_specials_roundtrip", "[NaN, Infinity, -Infinity, {a: NaN}, [2: x; NaN; -Infinity]]")

# ---------------------------------------------------------------- zen_grid
employees_grid = '[3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ]'
employees = [{"id": 1, "name": "Alice", "score": 95}, {"id": 2, "name": "Bob", "score": 87},
             {"id": 3, "name": "Carol", "score": 92}]
accept("zen_grid", "zen_listing", employees_grid, employees)
accept("zen_grid", "zen_listing_compact", '[3:id,name,score;1,"Alice",95;2,"Bob",87;3,"Carol",92]', employees)
accept("zen_grid", "zen_listing_bare", "[3: id, name, score; 1, Alice, 95; 2, Bob, 87; 3, Carol, 92]", employees)
accept("zen_grid", "zen_no_count", "[: id, name, score; 1, Alice, 95; 2, Bob, 87; 3, Carol, 92]", employees)
accept("zen_grid", "zen_two_by_two", "[2: h1, h2; 1, 2; 3, 4]", [{"h1": 1, "h2": 2}, {"h1": 3, "h2": 4}])
accept("zen_grid", "zen_short_row", "[: a, b; 1]", [{"a": 1, "b": None}])
accept("zen_grid", "zen_short_rows_mixed", "[3: a, b, c; 1, 2, 3; 4; 5, 6]",
       [{"a": 1, "b": 2, "c": 3}, {"a": 4, "b": None, "c": None}, {"a": 5, "b": 6, "c": None}])
accept("zen_grid", "zen_empty_cells", "[2: a, b, c; , 2, ; 1, , 3]",
       [{"a": None, "b": 2, "c": None}, {"a": 1, "b": None, "c": 3}])
accept("zen_grid", "zen_empty_row_between", "[3: a, b; 1, 2;; 3, 4]",
       [{"a": 1, "b": 2}, {"a": None, "b": None}, {"a": 3, "b": 4}])
accept("zen_grid", "zen_empty_first_row", "[2: a; ; 5]", [{"a": None}, {"a": 5}])
accept("zen_grid", "zen_header_only", "[0: a, b]", [])
accept("zen_grid", "zen_header_only_no_count", "[: a]", [])
accept("zen_grid", "zen_single_row", "[1: x; 42]", [{"x": 42}])
accept("zen_grid", "zen_nested_object_cell", '[1: a; {"x": [1,2]}]', [{"a": {"x": [1, 2]}}])
accept("zen_grid", "zen_nested_array_cell", "[2: a, b; [1, 2, 3], x; [], {}]",
       [{"a": [1, 2, 3], "b": "x"}, {"a": [], "b": {}}])
accept("zen_grid", "zen_nested_grid_cell", "[2: id, tags; 1, [2: k, v; a, 1; b, 2]; 2, [: k, v]]",
       [{"id": 1, "tags": [{"k": "a", "v": 1}, {"k": "b", "v": 2}]}, {"id": 2, "tags": []}])
accept("zen_grid", "zen_cells_with_separators_in_strings", '[2: a, b; "x,y", "p;q"; "]", "[:"]',
       [{"a": "x,y", "b": "p;q"}, {"a": "]", "b": "[:"}])
accept("zen_grid", "zen_quoted_headers", '[1: "first name", "a,b", "semi;colon", id; Ann, 1, 2, 3]',
       [{"first name": "Ann", "a,b": 1, "semi;colon": 2, "id": 3}])
accept("zen_grid", "zen_quoted_header_escapes", '[1: "q\\"h", "u\\u00e9"; 1, 2]', [{"q\"h": 1, "ué": 2}])
accept("zen_grid", "zen_reserved_cells", "[2: a, b, c, d, e; true, false, null, Infinity, NaN; -Infinity, True, Null, nan, inf]",
       [{"a": True, "b": False, "c": None, "d": INF, "e": NAN},
        {"a": -INF, "b": "True", "c": "Null", "d": "nan", "e": "inf"}])
accept("zen_grid", "zen_bare_identifiers", "[2: a, b; _x, snake_case; A1, Z_9_z]",
       [{"a": "_x", "b": "snake_case"}, {"a": "A1", "b": "Z_9_z"}])
accept("zen_grid", "zen_quoted_literals_stay_strings", '[2: a, b; "true", "null"; "NaN", "1"]',
       [{"a": "true", "b": "null"}, {"a": "NaN", "b": "1"}])
accept("zen_grid", "zen_numbers", "[3: i, f, e; 0, 0.5, 1e3; -7, -2.25, 2E-2; 9223372036854775807, 1.0, -0]",
       [{"i": 0, "f": 0.5, "e": 1000.0}, {"i": -7, "f": -2.25, "e": 0.02},
        {"i": 9223372036854775807, "f": 1.0, "e": 0}])
accept("zen_grid", "zen_unicode_cells", '[2: name, city; "Jürgen", "Köln"; "李", "北京"]',
       [{"name": "Jürgen", "city": "Köln"}, {"name": "李", "city": "北京"}])
accept("zen_grid", "zen_whitespace_and_newlines", "[\n  2 :\n  a ,\n  b ;\n  1 , 2 ;\n  3 , 4\n]",
       [{"a": 1, "b": 2}, {"a": 3, "b": 4}])
accept("zen_grid", "zen_comments_inside", "[ /* n */ 2 /* c */ : a, // hdr\n b; 1, 2; // r1\n 3, 4 /* end */ ]",
       [{"a": 1, "b": 2}, {"a": 3, "b": 4}])
accept("zen_grid", "zen_comment_between_bracket_and_colon", "[ /* x */ : a; 1]", [{"a": 1}])
accept("zen_grid", "zen_in_object", "{users: [2: id, name; 1, ann; 2, bob], total: 2}",
       {"users": [{"id": 1, "name": "ann"}, {"id": 2, "name": "bob"}], "total": 2})
accept("zen_grid", "zen_in_array", "[[: a; 1], [: b; 2; 3]]", [[{"a": 1}], [{"b": 2}, {"b": 3}]])
accept("zen_grid", "zen_many_columns", "[1: c0, c1, c2, c3, c4, c5, c6, c7, c8, c9; 0, 1, 2, 3, 4, 5, 6, 7, 8, 9]",
       [{f"c{i}": i for i in range(10)}])
accept("zen_grid", "zen_header_reserved_words", "[1: true, null, NaN; 1, 2, 3]", [{"true": 1, "null": 2, "NaN": 3}])
accept("zen_grid", "zen_count_ignored_policy", "[5: a; 1]", [{"a": 1}], "row_count_policy=ignore\n")
accept("zen_grid", "zen_count_zero_with_rows_ignored", "[0: a; 1; 2]", [{"a": 1}, {"a": 2}], "row_count_policy=ignore\n")
accept("zen_grid", "zen_strings_with_escapes", '[2: s; "a\\nb"; "tab\\there"]', [{"s": "a\nb"}, {"s": "tab\there"}])
accept("zen_grid", "zen_long_row_count", "[12: n; " + "; ".join(str(i) for i in range(12)) + "]",
       [{"n": i} for i in range(12)])
accept("zen_grid", "zen_trailing_nulls_implicit", "[3: a, b, c; 1; null; , , 3]",
       [{"a": 1, "b": None, "c": None}, {"a": None, "b": None, "c": None}, {"a": None, "b": None, "c": 3}])
accept("zen_grid", "zen_negative_special_cell", "[1: a, b; -Infinity, -1]", [{"a": -INF, "b": -1}])
accept("zen_grid", "zen_array_with_leading_digit_not_grid", "[1, 2]", [1, 2])
accept("zen_grid", "zen_array_of_digit_space_not_grid", "[ 12 , 3 ]", [12, 3])
reject("zen_grid", "zen_trailing_semicolon", "[2: a; 1; 2;]", "UnexpectedChar")
reject("zen_grid", "zen_trailing_semicolon_header", "[: a;]", "UnexpectedChar")
reject("zen_grid", "zen_count_mismatch_more", "[5: a; 1]", "RowCountMismatch")
reject("zen_grid", "zen_count_mismatch_fewer", "[1: a; 1; 2]", "RowCountMismatch")
reject("zen_grid", "zen_count_zero_with_rows", "[0: a; 1]", "RowCountMismatch")
reject("zen_grid", "zen_row_too_wide", "[1: a, b; 1, 2, 3]", "RowTooWide")
reject("zen_grid", "zen_row_too_wide_empty_cell", "[1: a; 1,]", "RowTooWide")
reject("zen_grid", "zen_duplicate_header", "[: a, b, a; 1, 2, 3]", "DuplicateHeader")
reject("zen_grid", "zen_duplicate_header_quoted", '[: a, "a"; 1, 2]', "DuplicateHeader")
reject("zen_grid", "zen_missing_header", "[2: ; 1]", "UnexpectedChar")
reject("zen_grid", "zen_numeric_header", "[1: 1; 2]", "UnexpectedChar")
reject("zen_grid", "zen_unclosed", "[2: a; 1; 2", "UnexpectedChar")
reject("zen_grid", "zen_cell_two_tokens", "[1: a; Alice Smith]", "UnexpectedChar")
reject("zen_grid", "zen_cell_number_then_word", "[1: a; 12ab]", "UnexpectedChar")
reject("zen_grid", "zen_count_leading_zero", "[01: a; 1]", "BadNumber")
reject("zen_grid", "zen_bad_number_cell", "[1: a; -01]", "BadNumber")
reject("zen_grid", "zen_depth_in_cell", "[1: a; [[1]]]", "DepthExceeded", "max_depth=3\n")
for i, text in enumerate([
    employees_grid,
    "[3: a, b, c; 1, , 3; , , ; x, y, z]",
    '[2: "first name", "x;y"; "Ann Lee", true; Bob, null]',
    "[2: id, tags; 1, [2: k, v; a, 1; b, 2]; 2, [: k, v]]",
    "[2: a, b; NaN, Infinity; -Infinity, -0.0]",
    '[2: s, t; "true", "false"; "null", "NaN"]',
    '[4: s; ""; " "; "_"; "a b"]',
    "{outer: [2: a; [2: b; 1; 2]; [2: b; 3; null]]}",
    '[2: a, b, c; {"x": [1, 2]}, [], {}; [[1]], [{"q": 1}], "\\u0000"]',
]):
    roundtrip("zen_grid", f"zen_roundtrip_{i}", text)
roundtrip("zen_grid", "zen_roundtrip_json_source", json.dumps(
    [{"k": "v" + str(i), "n": i, "f": i / 4, "b": i % 3 == 0, "z": None if i % 2 else i} for i in range(20)]))

# ---------------------------------------------------------------- numbers
num_accept = {
    "num_zero": ("0", 0),
    "num_neg_zero_int": ("-0", 0),
    "num_neg_zero_float": ("-0.0", -0.0),
    "num_one": ("1", 1),
    "num_negative": ("-123", -123),
    "num_fraction": ("1.5", 1.5),
    "num_exp_lower": ("1e10", 1e10),
    "num_exp_upper": ("1E10", 1e10),
    "num_exp_plus": ("2e+3", 2000.0),
    "num_exp_minus": ("2e-3", 0.002),
    "num_fraction_exp": ("-1.25e-2", -0.0125),
    "num_zero_fraction": ("0.0", 0.0),
    "num_zero_exp": ("0e0", 0.0),
    "num_int64_max": ("9223372036854775807", 9223372036854775807),
    "num_int64_min": ("-9223372036854775808", -9223372036854775808),
    "num_int64_max_plus_one": ("9223372036854775808", 9223372036854775808.0),
    "num_int64_min_minus_one": ("-9223372036854775809", -9223372036854775809.0),
    "num_twenty_digits": ("12345678901234567890", 12345678901234567890.0),
    "num_huge_int": ("1" + "0" * 30, 1e30),
    "num_tiny": ("5e-324", 5e-324),
    "num_subnormal": ("2.2250738585072011e-308", 2.2250738585072011e-308),
    "num_underflow": ("1e-400", 0.0),
    "num_max_double": ("1.7976931348623157e308", 1.7976931348623157e308),
    "num_overflow": ("1e309", INF),
    "num_neg_overflow": ("-1e309", -INF),
    "num_many_digits": ("3.141592653589793238462643383279", 3.141592653589793),
    "num_nineteen_nines": ("999999999999999999", 999999999999999999),
    "num_leading_zero_fraction": ("0.000001", 1e-6),
    "num_exp_leading_zeros": ("1e007", 1e7),
    "num_infinity": ("Infinity", INF),
    "num_neg_infinity": ("-Infinity", -INF),
    "num_nan": ("NaN", NAN),
}
for name, (text, value) in num_accept.items():
    accept("numbers", name, text, value)
    accept("numbers", name + "_in_array", "[" + text + "]", [value])
for name, text in {
    "num_leading_zero": "01",
    "num_neg_leading_zero": "-01",
    "num_trailing_dot": "1.",
    "num_dot_exp": "0.e1",
    "num_plus": "+1",
    "num_leading_dot": ".5",
    "num_lone_minus": "-",
    "num_infinit": "Infinit",
    "num_exp_no_digits": "1e",
    "num_exp_sign_no_digits": "1e+",
    "num_double_minus": "--1",
    "num_two_dots": "1.2.3",
    "num_minus_dot": "-.5",
    "num_neg_nan": "-NaN",
    "num_plus_infinity": "+Infinity",
    "num_infinity_lower": "[infinity]",
    "num_nan_suffix": "NaNa",
    "num_dot_only": ".",
    "num_internal_minus": "1-2",
    "num_leading_zeros_in_array": "[00]",
}.items():
    kind = "UnexpectedChar" if name in ("num_infinity_lower",) else "BadNumber"
    reject("numbers", name, text, kind)
reject("numbers", "num_hex", "[0x1F]", "UnexpectedChar")
reject("numbers", "num_trailing_garbage", "12abc", "TrailingData")

# ---------------------------------------------------------------- strings
str_accept = {
    "str_empty": ('""', ""),
    "str_simple_escape": ('"a\\nb"', "a\nb"),
    "str_all_short_escapes": ('"\\"\\\\\\/\\b\\f\\n\\r\\t"', "\"\\/\b\f\n\r\t"),
    "str_unicode_escape": ('"\\u00e9"', "é"),
    "str_unicode_escape_upper": ('"\\u00E9\\u4E2D"', "é中"),
    "str_surrogate_pair": ('"\\ud83d\\ude00"', "\U0001F600"),
    "str_surrogate_pair_upper": ('"\\uD834\\uDD1E"', "\U0001D11E"),
    "str_escaped_nul": ('"a\\u0000b"', "a\u0000b"),
    "str_raw_utf8": ('"héllo 世界 \U0001F680"', "héllo 世界 \U0001F680"),
    "str_raw_del": ('"\u007f"', "\u007f"),
    "str_escaped_slash": ('"a\\/b"', "a/b"),
    "str_backslash_run_even": ('"\\\\\\\\"', "\\\\"),
    "str_backslash_then_quote": ('"\\\\\\""', "\\\""),
    "str_quote_only": ('"\\""', "\""),
    "str_structurals_inside": ('"{[:;,]}"', "{[:;,]}"),
    "str_comment_markers": ('"/* // */"', "/* // */"),
    "str_noncharacter": ('"\\uffff"', "\uffff"),
    "str_bom_char": ('"\\ufeff"', "\ufeff"),
    "str_line_separator": ('"\u2028\u2029"', "\u2028\u2029"),
}
for name, (text, value) in str_accept.items():
    accept("strings", name, text, value)
# Escapes straddling 64-byte block boundaries in the accelerated scanner.
for pos in (61, 62, 63, 64, 65, 126, 127, 128):
    s = "a" * pos + "\\\"" + "b" * 10 + "\\\\" + "c" * 5
    accept("strings", f"str_escape_at_{pos}", "\"" + s + "\"", json.loads("\"" + s + "\""))
for run in (1, 2, 3, 4, 63, 64, 65):
    s = "\\" * (2 * run)
    accept("strings", f"str_backslash_pairs_{run}", "[\"" + s + "\", 1]", [json.loads("\"" + s + "\""), 1])
accept("strings", "str_quote_at_block_end", "[" + "\"" + "x" * 62 + "\"" + ",\"y\"]", ["x" * 62, "y"])
accept("strings", "str_long_mixed", json.dumps("é\"\\\n" * 100, ensure_ascii=False), "é\"\\\n" * 100)
reject("strings", "str_bad_escape_q", '"\\q"', "BadEscape")
reject("strings", "str_bad_escape_x", '"\\x41"', "BadEscape")
reject("strings", "str_bad_escape_single_quote", '"\\\'"', "BadEscape")
reject("strings", "str_bad_escape_capital_u", '"\\U0041"', "BadEscape")
reject("strings", "str_bad_unicode_hex", '"\\u12G4"', "BadUnicodeEscape")
reject("strings", "str_short_unicode", '"\\u12"', "BadUnicodeEscape")
reject("strings", "str_lone_high_surrogate", '"\\uD800"', "BadUnicodeEscape")
reject("strings", "str_lone_low_surrogate", '"\\uDC00"', "BadUnicodeEscape")
reject("strings", "str_high_then_char", '"\\uD800x"', "BadUnicodeEscape")
reject("strings", "str_high_then_high", '"\\uD800\\uD800"', "BadUnicodeEscape")
reject("strings", "str_unterminated", '"abc', "UnterminatedString")
reject("strings", "str_unterminated_escaped_quote", '"abc\\"', "UnterminatedString")
reject("strings", "str_unterminated_long", '["' + "z" * 200, "UnterminatedString")
reject("strings", "str_raw_newline", '"a\nb"', "UnexpectedChar")
reject("strings", "str_raw_tab", '"a\tb"', "UnexpectedChar")
reject("strings", "str_raw_nul", '"a\u0000b"', "UnexpectedChar")
reject("strings", "str_single_quoted", "'abc'", "UnexpectedChar")
reject("strings", "str_backslash_outside", "[\\n]", "UnexpectedChar")
roundtrip("strings", "str_roundtrip_controls", json.dumps(["".join(chr(c) for c in range(32)), "\u007f\u0080￿"]))
roundtrip("strings", "str_roundtrip_long_escapes", json.dumps(["q\"" * 40, "\\" * 70, "t\t" * 33]))

# ---------------------------------------------------------------- errors
err = {
    "err_empty_document": ("", "UnexpectedChar"),
    "err_whitespace_only": ("  \n\t ", "UnexpectedChar"),
    "err_comment_only": ("/* nothing */", "UnexpectedChar"),
    "err_truncated_array": ("[1,2,", "UnexpectedChar"),
    "err_truncated_object": ('{"a":', "UnexpectedChar"),
    "err_missing_colon": ('{"a" 1}', "UnexpectedChar"),
    "err_missing_comma": ("[1 2]", "UnexpectedChar"),
    "err_leading_comma": ("[,1]", "UnexpectedChar"),
    "err_close_only": ("]", "UnexpectedChar"),
    "err_mismatched_close": ("[1}", "UnexpectedChar"),
    "err_object_comma_only": ("{,}", "UnexpectedChar"),
    "err_numeric_key": ("{1: 2}", "UnexpectedChar"),
    "err_bad_literal": ("[tru]", "UnexpectedChar"),
    "err_capital_true": ("True", "UnexpectedChar"),
    "err_semicolon_in_array": ("[1; 2]", "UnexpectedChar"),
    "err_unclosed_block_comment": ("[1] /* never closed", "UnterminatedComment"),
    "err_unclosed_block_comment_star": ("/*/", "UnterminatedComment"),
    "err_unterminated_string_key": ('{"abc: 1}', "UnterminatedString"),
    "err_bad_number": ("[1, -01]", "BadNumber"),
    "err_bad_escape": ('["\\a"]', "BadEscape"),
    "err_bad_unicode": ('["\\uZZZZ"]', "BadUnicodeEscape"),
    "err_trailing_value": ("[1] [2]", "TrailingData"),
    "err_trailing_comma_top": ("1,", "TrailingData"),
    "err_trailing_close": ("{}}", "TrailingData"),
    "err_trailing_after_comment": ("1 /* c */ 2", "TrailingData"),
    "err_duplicate_header": ("[: x, y, x; 1]", "DuplicateHeader"),
    "err_row_too_wide": ("[: x; 1, 2]", "RowTooWide"),
    "err_row_count_mismatch": ("[3: x; 1; 2]", "RowCountMismatch"),
}
for name, (text, kind) in err.items():
    reject("errors", name, text, kind)
reject("errors", "err_depth_exceeded_small", "[[[[1]]]]", "DepthExceeded", "max_depth=3\n")
reject("errors", "err_depth_exceeded_object", '{"a":{"b":{"c":{}}}}', "DepthExceeded", "max_depth=3\n")
reject("errors", "err_depth_exceeded_grid_rows", "[[: a; 1]]", "DepthExceeded", "max_depth=2\n")
accept("errors", "err_depth_at_limit", "[[[1]]]", [[[1]]], "max_depth=3\n")
accept("errors", "err_depth_grid_at_limit", "[[: a; 1]]", [[{"a": 1}]], "max_depth=3\n")

# ---------------------------------------------------------------- stress
accept("stress", "stress_depth_1024", "[" * 1024 + "]" * 1024, json.loads("[" * 1024 + "]" * 1024))
reject("stress", "stress_depth_1025", "[" * 1025 + "]" * 1025, "DepthExceeded")
accept("stress", "stress_object_depth_1024", '{"a":' * 1023 + "{}" + "}" * 1023,
       json.loads('{"a":' * 1023 + "{}" + "}" * 1023))
big_array = list(range(-5000, 5000))
accept("stress", "stress_long_int_array", json.dumps(big_array), big_array)
floats = [i * 0.37 - 100.5 for i in range(2000)]
accept("stress", "stress_float_array", json.dumps(floats), floats)
many_keys = {f"key_{i}": i for i in range(2000)}
accept("stress", "stress_many_keys", json.dumps(many_keys), many_keys)
dup_keys = "{" + ",".join(f'"k{i % 50}":{i}' for i in range(500)) + "}"
accept("stress", "stress_many_duplicate_keys", dup_keys, json.loads(dup_keys))
long_str = "".join(chr(0x20 + (i * 7) % 90) for i in range(200000))
accept("stress", "stress_long_string", json.dumps(long_str), long_str)
grid_rows = [{"id": i, "name": f"user_{i}", "score": (i * 37) % 101, "active": i % 3 != 0} for i in range(600)]
grid_text = "[600: id, name, score, active; " + "; ".join(
    f'{r["id"]}, user_{r["id"]}, {r["score"]}, {"true" if r["active"] else "false"}' for r in grid_rows) + "]"
accept("stress", "stress_big_grid", grid_text, grid_rows)
nested_grids = "[2: a; " + "[2: a; " * 100 + "1; 2" + "]; null" * 100 + "]"


def nest(depth):
    if depth == 0:
        return [{"a": 1}, {"a": 2}]
    return [{"a": nest(depth - 1)}, {"a": None}]


accept("stress", "stress_nested_grids", nested_grids, nest(100))
comments = "/* c */ " * 2000 + "[" + ", ".join(f"{i} // n\n" for i in range(500)) + "]"
accept("stress", "stress_many_comments", comments, list(range(500)))
ws = " " * 100000 + "1" + "\n" * 100000
accept("stress", "stress_whitespace", ws, 1)
esc = json.dumps(["\\\"" * 5000, "\"" * 3000])
accept("stress", "stress_escape_runs", esc, json.loads(esc))
roundtrip("stress", "stress_roundtrip_grid", json.dumps(grid_rows))
roundtrip("stress", "stress_roundtrip_deep", "[" * 500 + "{\"a\": [1, 2]}" + "]" * 500)
roundtrip("stress", "stress_roundtrip_floats", json.dumps(floats))


def main():
    if ROOT.exists():
        shutil.rmtree(ROOT)
    counts = {}
    for name, (category, data, files) in vectors.items():
        d = ROOT / category
        d.mkdir(parents=True, exist_ok=True)
        (d / f"{name}.input.jton").write_bytes(data)
        for suffix, content in files.items():
            (d / f"{name}{suffix}").write_text(content, encoding="utf-8")
        counts[category] = counts.get(category, 0) + 1
    for c in sorted(counts):
        print(f"{c}: {counts[c]}")
    print(f"total: {len(vectors)}")


if __name__ == "__main__":
    main()
