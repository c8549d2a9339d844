#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "jton/jton.hpp"

namespace fs = std::filesystem;
using jton::Category;
using jton::ManifestError;

namespace {

class TempCorpus {
 public:
  TempCorpus() {
    static int counter = 0;
    root_ = fs::temp_directory_path() / ("jton_corpus_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(root_);
  }
  ~TempCorpus() { fs::remove_all(root_); }

  void put(const std::string& rel, const std::string& content) {
    const auto p = root_ / rel;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
  }
  const fs::path& root() const { return root_; }

 private:
  fs::path root_;
};

}  // namespace

TEST(Manifest, LoadsValidVectors) {
  TempCorpus c;
  c.put("zen_grid/basic.input.jton", "[:a;1]");
  c.put("zen_grid/basic.expect.json", R"([{"a":1}])");
  c.put("numbers/lead.input.jton", "-01");
  c.put("numbers/lead.reject", "BadNumber\n");
  const auto v = jton::load_vectors(c.root());
  ASSERT_EQ(v.size(), 2u);
  for (const auto& t : v) EXPECT_TRUE(jton::run_vector(t).pass) << t.name;
}

TEST(Manifest, Errors) {
  {
    TempCorpus c;
    c.put("numbers/x.input.jton", "1");
    c.put("numbers/x.expect.json", "1");
    c.put("strings/x.input.jton", "1");
    c.put("strings/x.expect.json", "1");
    EXPECT_THROW(jton::load_vectors(c.root()), ManifestError);
  }
  {
    TempCorpus c;
    c.put("numbers/x.expect.json", "1");
    EXPECT_THROW(jton::load_vectors(c.root()), ManifestError);
  }
  {
    TempCorpus c;
    c.put("numbers/x.input.jton", "1");
    c.put("numbers/x.expect.json", "{a:1}");
    try {
      jton::load_vectors(c.root());
      FAIL();
    } catch (const ManifestError& e) {
      EXPECT_EQ(e.line(), 1u);
      EXPECT_NE(e.file().find("x.expect.json"), std::string::npos);
    }
  }
  {
    TempCorpus c;
    c.put("numbers/x.input.jton", "1");
    c.put("numbers/x.reject", "NoSuchKind");
    EXPECT_THROW(jton::load_vectors(c.root()), ManifestError);
  }
  {
    TempCorpus c;
    c.put("numbers/x.input.jton", "1");
    c.put("numbers/x.roundtrip", "json-compact\nzen-sideways\n");
    try {
      jton::load_vectors(c.root());
      FAIL();
    } catch (const ManifestError& e) {
      EXPECT_EQ(e.line(), 2u);
    }
  }
  {
    TempCorpus c;
    c.put("numbers/x.input.jton", "1");
    c.put("numbers/x.expect.json", "1");
    c.put("numbers/x.options", "# comment\nmax_depth = 0\n");
    EXPECT_THROW(jton::load_vectors(c.root()), ManifestError);
  }
  {
    TempCorpus c;
    c.put("misc/x.input.jton", "1");
    EXPECT_THROW(jton::load_vectors(c.root()), ManifestError);
  }
}

TEST(Runner, Outcomes) {
  jton::TestVector accept{"inf", "Infinity", jton::AcceptExpectation{R"({"$float":"Infinity"})"}, Category::Numbers, {}};
  EXPECT_TRUE(jton::run_vector(accept).pass);
  jton::TestVector wrong{"w", "[1]", jton::AcceptExpectation{"[2]"}, Category::StrictJson, {}};
  const auto r = jton::run_vector(wrong);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.diagnostic.empty());
  jton::TestVector wrong_kind{"k", "-01", jton::RejectExpectation{jton::ErrorKind::TrailingData}, Category::Errors, {}};
  EXPECT_FALSE(jton::run_vector(wrong_kind).pass);
  jton::TestVector rt{"rt", "[2:a,b;1,x;NaN,]", jton::RoundTripExpectation{{"zen-bare-implicit-null", "json-pretty"}},
                      Category::ZenGrid, {}};
  EXPECT_TRUE(jton::run_vector(rt).pass);
}

TEST(Runner, TapOutput) {
  std::vector<jton::TestVector> vs{
      {"good", "1", jton::AcceptExpectation{"1"}, Category::Numbers, {}},
      {"bad", "1", jton::AcceptExpectation{"2"}, Category::Numbers, {}},
  };
  std::ostringstream out;
  EXPECT_EQ(jton::run_corpus(vs, out), 1u);
  const std::string s = out.str();
  EXPECT_NE(s.find("1..2"), std::string::npos);
  EXPECT_NE(s.find("ok 1 - numbers/good"), std::string::npos);
  EXPECT_NE(s.find("not ok 2 - numbers/bad"), std::string::npos);
}

TEST(Labels, Parse) {
  auto o = jton::serialize_options_from_label("zen-bare-spaced-no-count");
  ASSERT_TRUE(o);
  EXPECT_TRUE(o->bare_strings);
  EXPECT_FALSE(o->implicit_null);
  EXPECT_EQ(o->spacing, jton::Spacing::Spaced);
  EXPECT_FALSE(o->emit_row_count);
  EXPECT_EQ(jton::serialize_options_from_label("json-pretty")->mode, jton::OutputMode::JsonPretty);
  EXPECT_FALSE(jton::serialize_options_from_label("zen-"));
  EXPECT_FALSE(jton::serialize_options_from_label("json"));
}

TEST(Corpus, CoverageInvariants) {
  const auto vectors = jton::load_vectors(JTON_VECTORS_DIR);
  EXPECT_GE(vectors.size(), 300u);
  std::set<jton::ErrorKind> kinds;
  std::set<Category> accept_categories;
  for (const auto& v : vectors) {
    if (const auto* r = std::get_if<jton::RejectExpectation>(&v.expectation)) kinds.insert(r->kind);
    if (std::holds_alternative<jton::AcceptExpectation>(v.expectation)) accept_categories.insert(v.category);
  }
  for (auto k : jton::kAllErrorKinds) EXPECT_TRUE(kinds.count(k)) << jton::error_kind_name(k);
  for (auto c : {Category::StrictJson, Category::Extensions, Category::ZenGrid, Category::Numbers, Category::Strings}) {
    EXPECT_TRUE(accept_categories.count(c)) << jton::category_dir(c);
  }
}

TEST(Corpus, AcceptVectorsRoundTripCompact) {
  for (const auto& v : jton::load_vectors(JTON_VECTORS_DIR)) {
    if (!std::holds_alternative<jton::AcceptExpectation>(v.expectation)) continue;
    jton::TestVector rt{v.name, v.input, jton::RoundTripExpectation{{"json-compact", "zen"}}, v.category, v.options};
    const auto r = jton::run_vector(rt);
    EXPECT_TRUE(r.pass) << v.name << ": " << r.diagnostic;
  }
}
