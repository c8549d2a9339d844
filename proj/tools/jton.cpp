// jton: convert, validate, measure and benchmark JTON documents.
//
// Exit codes: 0 success, 1 invalid document (or failing corpus), 2 usage or
// I/O failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jton/jton.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string output = "-";
  // serialize
  std::string to = "json-compact";
  bool spaced = false;
  bool bare_strings = false;
  bool implicit_null = false;
  bool no_row_count = false;
  std::size_t indent = 2;
  bool reject_nonfinite = false;
  // parse
  bool strict_json = false;
  std::size_t max_depth = 1024;
  std::string row_count_policy = "strict";
  // stats / bench
  std::string generate;
  std::string counter = "bytes";
  std::string spacing = "spaced";
  std::size_t iters = 0;
  std::size_t warmup = 0;
  // conformance
  std::string vectors;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("cannot read standard input");
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("cannot write '" + path + "'");
}

jton::ParseOptions parse_options(const Config& c) {
  jton::ParseOptions o;
  o.allow_extensions = !c.strict_json;
  o.max_depth = c.max_depth;
  o.zen_row_count_policy =
      c.row_count_policy == "ignore" ? jton::RowCountPolicy::Ignore : jton::RowCountPolicy::Strict;
  return o;
}

jton::SerializeOptions serialize_options(const Config& c) {
  jton::SerializeOptions o;
  if (c.to == "json-pretty") o.mode = jton::OutputMode::JsonPretty;
  if (c.to == "json-compact") o.mode = jton::OutputMode::JsonCompact;
  if (c.to == "zen") o.mode = jton::OutputMode::Zen;
  o.spacing = c.spaced ? jton::Spacing::Spaced : jton::Spacing::Compact;
  o.bare_strings = c.bare_strings;
  o.implicit_null = c.implicit_null;
  o.emit_row_count = !c.no_row_count;
  o.indent = c.indent;
  o.strict_json = c.reject_nonfinite;
  return o;
}

jton::DatasetSpec parse_generate(const std::string& g) {
  // shape:rows:seed
  const auto a = g.find(':');
  const auto b = a == std::string::npos ? std::string::npos : g.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--generate expects shape:rows:seed");
  const auto shape = jton::dataset_shape_from_name(g.substr(0, a));
  if (!shape) throw UsageError("unknown dataset shape '" + g.substr(0, a) + "' (employees, products, metrics)");
  jton::DatasetSpec spec;
  spec.shape = *shape;
  try {
    std::size_t used = 0;
    const std::string rows = g.substr(a + 1, b - a - 1);
    spec.rows = std::stoull(rows, &used);
    if (used != rows.size() || spec.rows == 0) throw std::invalid_argument("rows");
    const std::string seed = g.substr(b + 1);
    spec.seed = std::stoull(seed, &used);
    if (used != seed.size()) throw std::invalid_argument("seed");
  } catch (const std::logic_error&) {
    throw UsageError("--generate expects shape:rows:seed with rows >= 1");
  }
  return spec;
}

// Either the generated dataset or the parsed input document.
struct Document {
  std::string text;
  jton::Value value;
};

Document load_document(const Config& c) {
  Document d;
  if (!c.generate.empty()) {
    d.value = jton::generate_dataset(parse_generate(c.generate));
    d.text = jton::serialize(d.value);
    return d;
  }
  d.text = read_input(c.input);
  d.value = jton::parse_document(d.text, parse_options(c));
  return d;
}

int cmd_convert(const Config& c) {
  const std::string text = read_input(c.input);
  const jton::Value v = jton::parse_document(text, parse_options(c));
  std::string out = jton::serialize(v, serialize_options(c));
  out += '\n';
  write_output(c.output, out);
  return kExitOk;
}

int cmd_validate(const Config& c) {
  const std::string text = read_input(c.input);
  const jton::Value v = jton::parse_document(text, parse_options(c));
  std::cout << "valid kind=" << jton::kind_name(v.kind()) << " depth=" << jton::depth_of(v) << '\n';
  return kExitOk;
}

std::string format_delta(std::optional<double> d) {
  if (!d) return "n/a";
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << (*d >= 0 ? "+" : "") << *d << "%";
  return ss.str();
}

int cmd_stats(const Config& c) {
  const Document d = load_document(c);
  std::unique_ptr<jton::TokenCounter> counter;
  try {
    counter = jton::make_counter(c.counter);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto spacing = c.spacing == "compact" ? jton::Spacing::Compact : jton::Spacing::Spaced;
  const jton::SavingsReport r = jton::savings_report(d.value, *counter, spacing);

  std::ostringstream table;
  table << std::left << std::setw(14) << "format" << std::right << std::setw(12) << "size" << std::setw(12)
        << "delta" << '\n';
  std::ostringstream machine;
  for (auto f : jton::kReportFormats) {
    const auto size = r.size(f);
    if (!size) continue;
    const std::string delta = format_delta(r.delta_vs_compact(f));
    table << std::left << std::setw(14) << jton::report_format_label(f) << std::right << std::setw(12) << *size
          << std::setw(12) << delta << '\n';
    std::ostringstream pct;
    pct << std::fixed << std::setprecision(2) << r.delta_vs_compact(f).value_or(0.0);
    machine << "format=" << jton::report_format_label(f) << " tokens=" << *size << " delta=" << pct.str() << '\n';
  }
  std::cout << "counter: " << counter->name() << "  rows: " << r.rows << "  cols: " << r.cols << '\n';
  std::cout << table.str();
  if (!r.zen_eligible()) {
    std::cout << "note: input is not a Zen Grid candidate; only JSON formats are reported\n";
  } else {
    std::cout << "predicted savings: " << std::fixed << std::setprecision(1) << *r.predicted_delta_tokens
              << " (mean header " << *r.mean_header_tokens << ", struct " << *r.struct_tokens << ")\n";
  }
  std::cout << machine.str();
  std::cout << "rows=" << r.rows << " cols=" << r.cols << " counter=" << c.counter
            << " zen_eligible=" << (r.zen_eligible() ? "true" : "false") << '\n';
  if (r.predicted_delta_tokens) {
    std::cout << "predicted_savings=" << std::fixed << std::setprecision(1) << *r.predicted_delta_tokens << '\n';
  }
  return kExitOk;
}

// Restores JTON_FORCE_SCALAR to its value at construction.
class ScalarSwitch {
 public:
  ScalarSwitch() {
    if (const char* v = std::getenv("JTON_FORCE_SCALAR")) saved_ = v;
  }
  ~ScalarSwitch() { restore(); }
  void force() { ::setenv("JTON_FORCE_SCALAR", "1", 1); }
  void restore() {
    if (saved_) {
      ::setenv("JTON_FORCE_SCALAR", saved_->c_str(), 1);
    } else {
      ::unsetenv("JTON_FORCE_SCALAR");
    }
  }

 private:
  std::optional<std::string> saved_;
};

template <typename F>
double time_loop(std::size_t warmup, std::size_t iters, F&& f) {
  for (std::size_t i = 0; i < warmup; ++i) f();
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < iters; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench_line(const std::string& phase, const std::string& variant, std::size_t bytes, std::size_t iters,
                double seconds) {
  const double mbps = seconds > 0 ? static_cast<double>(bytes) * static_cast<double>(iters) / seconds / 1e6 : 0.0;
  std::cout << "phase=" << phase << " variant=" << variant << " bytes=" << bytes << " iters=" << iters
            << " seconds=" << std::fixed << std::setprecision(6) << seconds << " mb_per_s=" << std::setprecision(2)
            << mbps << '\n';
}

int cmd_bench(const Config& c) {
  const Document d = load_document(c);
  constexpr std::size_t kMiB = 1 << 20;
  const std::size_t iters = c.iters != 0 ? c.iters : (d.text.size() < kMiB ? 5000 : 20);
  const std::size_t warmup = c.warmup != 0 ? c.warmup : std::max<std::size_t>(1, iters / 10);
  const jton::ParseOptions popts = parse_options(c);

  // Parse input: the document as given (or the compact JSON of a generated one).
  const std::string& input = d.text;
  std::cout << "input_bytes=" << input.size() << " iters=" << iters << " warmup=" << warmup
            << " accelerated_available=" << (jton::accelerated_scan_active() ? "true" : "false") << '\n';

  ScalarSwitch sw;
  std::size_t sink = 0;
  sw.force();
  const double scalar_s =
      time_loop(warmup, iters, [&] { sink += jton::depth_of(jton::parse_document(input, popts)); });
  sw.restore();
  bench_line("parse", "scalar", input.size(), iters, scalar_s);
  const double accel_s =
      time_loop(warmup, iters, [&] { sink += jton::depth_of(jton::parse_document(input, popts)); });
  bench_line("parse", jton::accelerated_scan_active() ? "accelerated" : "accelerated(disabled)", input.size(), iters,
             accel_s);

  sw.force();
  const double scan_scalar_s =
      time_loop(warmup, iters, [&] { sink += jton::scan_structural_accelerated(input).string_mask.size(); });
  sw.restore();
  bench_line("scan", "scalar", input.size(), iters, scan_scalar_s);
  const double scan_accel_s =
      time_loop(warmup, iters, [&] { sink += jton::scan_structural_accelerated(input).string_mask.size(); });
  bench_line("scan", jton::accelerated_scan_active() ? "accelerated" : "accelerated(disabled)", input.size(), iters,
             scan_accel_s);

  // Serialize throughput is normalized by the compact JSON size of the value
  // so every mode is measured against the same logical payload.
  const std::size_t payload = jton::serialize(d.value).size();
  const std::pair<const char*, jton::SerializeOptions> modes[] = {
      {"json-pretty", jton::report_options(jton::ReportFormat::JsonPretty, jton::Spacing::Compact)},
      {"json-compact", jton::report_options(jton::ReportFormat::JsonCompact, jton::Spacing::Compact)},
      {"zen", jton::report_options(jton::ReportFormat::Zen, jton::Spacing::Compact)},
      {"zen-bare", jton::report_options(jton::ReportFormat::ZenBare, jton::Spacing::Compact)},
  };
  for (const auto& [label, opts] : modes) {
    const double s = time_loop(warmup, iters, [&] { sink += jton::serialize(d.value, opts).size(); });
    bench_line("serialize", label, payload, iters, s);
  }
  std::cout << "parse_speedup=" << std::fixed << std::setprecision(3) << (accel_s > 0 ? scalar_s / accel_s : 0.0)
            << " scan_speedup=" << (scan_accel_s > 0 ? scan_scalar_s / scan_accel_s : 0.0) << '\n';
  if (sink == 0) std::cout << '\n';  // keeps the timed work observable
  return kExitOk;
}

int cmd_conformance(const Config& c) {
  std::string dir = c.vectors;
#ifdef JTON_DEFAULT_VECTORS
  if (dir.empty()) dir = JTON_DEFAULT_VECTORS;
#endif
  if (dir.empty()) throw UsageError("conformance needs a vector directory");
  std::vector<jton::TestVector> vectors;
  try {
    vectors = jton::load_vectors(dir);
  } catch (const jton::ManifestError& e) {
    throw IoError(std::string("manifest error: ") + e.what());
  }
  const std::size_t failures = jton::run_corpus(vectors, std::cout);
  std::cout << "# vectors=" << vectors.size() << " failed=" << failures << '\n';
  return failures == 0 ? kExitOk : kExitInvalid;
}

void add_parse_flags(CLI::App* sub, Config& c) {
  sub->add_flag("--strict-json", c.strict_json, "Accept only RFC 8259 JSON (no extensions)");
  sub->add_option("--max-depth", c.max_depth, "Maximum nesting depth")->check(CLI::PositiveNumber);
  sub->add_option("--row-count-policy", c.row_count_policy, "Zen Grid row count check")
      ->check(CLI::IsMember({"strict", "ignore"}));
}

void add_source_flags(CLI::App* sub, Config& c) {
  sub->add_option("input", c.input, "Input file ('-' for stdin)");
  sub->add_option("--generate", c.generate, "Use a generated dataset instead: shape:rows:seed");
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"jton: JSON superset with Zen Grid tables"};
  app.require_subcommand(1, 1);

  auto* convert = app.add_subcommand("convert", "Parse a document and write it in another format");
  convert->add_option("input", c.input, "Input file ('-' for stdin)");
  convert->add_option("-o,--output", c.output, "Output file ('-' for stdout)");
  convert->add_option("--to", c.to, "Output format")->check(CLI::IsMember({"json-pretty", "json-compact", "zen"}));
  auto* spaced = convert->add_flag("--spaced", c.spaced, "Zen: listing-style spacing");
  auto* bare = convert->add_flag("--bare-strings", c.bare_strings, "Zen: unquoted identifier-like strings");
  auto* inull = convert->add_flag("--implicit-null", c.implicit_null, "Zen: empty cells for null");
  auto* nocount = convert->add_flag("--no-row-count", c.no_row_count, "Zen: omit the row count");
  auto* indent = convert->add_option("--indent", c.indent, "json-pretty: spaces per level");
  convert->add_flag("--reject-nonfinite", c.reject_nonfinite, "Fail instead of writing NaN/Infinity");
  add_parse_flags(convert, c);

  auto* validate = app.add_subcommand("validate", "Check that a document parses");
  validate->add_option("input", c.input, "Input file ('-' for stdin)");
  add_parse_flags(validate, c);

  auto* stats = app.add_subcommand("stats", "Compare document size across formats");
  add_source_flags(stats, c);
  stats->add_option("--counter", c.counter, "bytes, chars or plugin:<path>");
  stats->add_option("--spacing", c.spacing, "Zen spacing for the report")
      ->check(CLI::IsMember({"compact", "spaced"}));
  add_parse_flags(stats, c);

  auto* bench = app.add_subcommand("bench", "Measure parse and serialize throughput");
  add_source_flags(bench, c);
  bench->add_option("--iters", c.iters, "Timed repetitions (default 5000 below 1 MiB, else 20)");
  bench->add_option("--warmup", c.warmup, "Untimed repetitions (default iters/10)");
  add_parse_flags(bench, c);

  auto* conformance = app.add_subcommand("conformance", "Run a test-vector corpus (TAP output)");
  conformance->add_option("vectors", c.vectors, "Corpus directory");

  try {
    app.parse(argc, argv);
    if (convert->parsed()) {
      const bool zen = c.to == "zen";
      for (auto* opt : {spaced, bare, inull, nocount}) {
        if (opt->count() > 0 && !zen) throw UsageError(opt->get_name() + " requires --to zen");
      }
      if (indent->count() > 0 && c.to != "json-pretty") throw UsageError("--indent requires --to json-pretty");
    }
    if ((stats->parsed() || bench->parsed()) && !c.generate.empty() && c.input != "-") {
      throw UsageError("give either an input file or --generate, not both");
    }
    if (convert->parsed()) return cmd_convert(c);
    if (validate->parsed()) return cmd_validate(c);
    if (stats->parsed()) return cmd_stats(c);
    if (bench->parsed()) return cmd_bench(c);
    return cmd_conformance(c);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const jton::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  } catch (const jton::SerializeError& e) {
    std::cerr << "serialize error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const jton::PluginFailure& e) {
    std::cerr << "counter plugin error: " << e.what() << '\n';
    return kExitIo;
  }
}
