#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "jton/jton.hpp"

#ifdef JTON_CLI_PATH

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `stdin_text` on standard input; stderr is merged into
// out when `merge` is set.
Run run(const std::string& args, const std::string& stdin_text = "", bool merge = false) {
  const auto in = std::filesystem::temp_directory_path() / ("jton_cli_in_" + std::to_string(::getpid()));
  std::ofstream(in, std::ios::binary) << stdin_text;
  const std::string cmd =
      std::string("'") + JTON_CLI_PATH + "' " + args + " < '" + in.string() + "'" + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::filesystem::remove(in);
  return r;
}

const std::string kEmployeesJson =
    R"([{"id":1,"name":"Alice","score":95},{"id":2,"name":"Bob","score":87},{"id":3,"name":"Carol","score":92}])";
const std::string kEmployeesZen = R"([3: id, name, score; 1, "Alice", 95; 2, "Bob", 87; 3, "Carol", 92 ])";

}  // namespace

TEST(Cli, ConvertToZenSpaced) {
  auto r = run("convert --to zen --spaced", kEmployeesJson);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kEmployeesZen + "\n");
}

TEST(Cli, ConvertBackToCompact) {
  auto r = run("convert --to json-compact", kEmployeesZen);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kEmployeesJson + "\n");
}

TEST(Cli, ConvertBadNumber) {
  auto r = run("convert", "-01", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("BadNumber at byte 0"), std::string::npos) << r.out;
}

TEST(Cli, ConvertRejectNonFinite) {
  EXPECT_EQ(run("convert", "[NaN]").code, 0);
  EXPECT_EQ(run("convert --reject-nonfinite", "[NaN]").code, 1);
}

TEST(Cli, ZenFlagsNeedZenOutput) { EXPECT_EQ(run("convert --bare-strings --to json-compact", "1").code, 2); }

TEST(Cli, MissingInputFile) { EXPECT_EQ(run("convert /nonexistent/file.jton").code, 2); }

TEST(Cli, Validate) {
  EXPECT_EQ(run("validate", "{a:1}").code, 0);
  EXPECT_EQ(run("validate --strict-json", "{a:1}").code, 1);
  EXPECT_EQ(run("validate", "").code, 1);
  EXPECT_EQ(run("validate --row-count-policy ignore", "[5: a; 1]").code, 0);
  EXPECT_EQ(run("validate", "[5: a; 1]").code, 1);
  EXPECT_EQ(run("validate --max-depth 2", "[[[1]]]").code, 1);
}

TEST(Cli, StatsGenerated) {
  auto r = run("stats --generate employees:100:0 --counter bytes");
  ASSERT_EQ(r.code, 0);
  for (const char* label : {"format=json-pretty ", "format=json-compact ", "format=zen ", "format=zen-bare "}) {
    EXPECT_NE(r.out.find(label), std::string::npos) << label;
  }
  EXPECT_NE(r.out.find("format=zen tokens="), std::string::npos);
  const auto pos = r.out.find("format=zen tokens=");
  const auto delta = r.out.find("delta=", pos);
  ASSERT_NE(delta, std::string::npos);
  EXPECT_EQ(r.out[delta + 6], '-');
  EXPECT_NE(r.out.find("rows=100"), std::string::npos);
}

TEST(Cli, StatsIneligible) {
  auto r = run("stats", R"({"a": 1})");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("format=json-compact"), std::string::npos);
  EXPECT_EQ(r.out.find("format=zen "), std::string::npos);
  EXPECT_NE(r.out.find("zen_eligible=false"), std::string::npos);
}

TEST(Cli, StatsBadCounter) { EXPECT_EQ(run("stats --generate employees:5:0 --counter plugin:/nonexistent").code, 2); }

TEST(Cli, BenchSmoke) {
  auto r = run("bench --generate employees:50:0 --iters 1 --warmup 0");
  ASSERT_EQ(r.code, 0);
  for (const char* row : {"phase=parse variant=scalar", "phase=parse variant=accelerated", "phase=scan variant=scalar",
                          "phase=serialize variant=json-compact", "phase=serialize variant=zen", "parse_speedup="}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
}

TEST(Cli, ForceScalarHonored) {
  const std::string doc = R"({"t": /* c */ [2: "a,b", c; "x\"", [1,2]; y, {"k": ";"}]})";
  auto accelerated = run("convert --to zen", doc);
  ::setenv("JTON_FORCE_SCALAR", "1", 1);
  auto scalar = run("convert --to zen", doc);
  auto bad = run("validate", "[1, \"open", true);
  ::unsetenv("JTON_FORCE_SCALAR");
  EXPECT_EQ(accelerated.code, 0);
  EXPECT_EQ(accelerated.out, scalar.out);
  EXPECT_NE(bad.out.find("UnterminatedString at byte 4"), std::string::npos) << bad.out;
}

TEST(Cli, Conformance) {
  auto r = run(std::string("conformance '") + JTON_VECTORS_DIR + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("failed=0"), std::string::npos);
}

TEST(Cli, ConvertIdentityOverCorpus) {
  for (const auto& v : jton::load_vectors(JTON_VECTORS_DIR)) {
    const auto* acc = std::get_if<jton::AcceptExpectation>(&v.expectation);
    if (!acc || v.category == jton::Category::Stress) continue;
    if (!v.options.allow_extensions || v.options.zen_row_count_policy != jton::RowCountPolicy::Strict) continue;
    if (v.options.max_depth != jton::ParseOptions{}.max_depth) continue;
    auto zen = run("convert --to zen", v.input);
    ASSERT_EQ(zen.code, 0) << v.name;
    auto back = run("convert --to json-compact", zen.out);
    ASSERT_EQ(back.code, 0) << v.name;
    EXPECT_TRUE(jton::values_equal(jton::parse_document(back.out), jton::parse_document(v.input), true)) << v.name;
  }
}

#endif
