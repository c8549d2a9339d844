#pragma once

// Size metrics for serialized documents and the analytic savings model.

#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jton/value.hpp"
#include "jton/writer.hpp"

namespace jton {

class TokenCounter {
 public:
  virtual ~TokenCounter() = default;
  virtual std::size_t count(std::string_view text) = 0;
  virtual std::string name() const = 0;
};

/// UTF-8 byte length.
class ByteCounter final : public TokenCounter {
 public:
  std::size_t count(std::string_view text) override { return text.size(); }
  std::string name() const override { return "bytes"; }
};

/// Unicode code points (input assumed to be UTF-8).
class CharCounter final : public TokenCounter {
 public:
  std::size_t count(std::string_view text) override {
    std::size_t n = 0;
    for (char c : text) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    return n;
  }
  std::string name() const override { return "chars"; }
};

class PluginFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// External counter running as a child process.
///
/// Protocol on the child's stdin/stdout: each request is the decimal byte
/// length, a newline, then the UTF-8 text; each response is the decimal
/// count followed by a newline. One request is in flight at a time.
class PluginCounter final : public TokenCounter {
 public:
  explicit PluginCounter(std::string path, int timeout_ms = 60000)
      : path_(std::move(path)), timeout_ms_(timeout_ms) {
    if (::access(path_.c_str(), X_OK) != 0) throw PluginFailure("counter plugin is not executable: " + path_);
    int sv[2];
    if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sv) != 0) {
      throw PluginFailure("socketpair failed for counter plugin");
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
      ::close(sv[0]);
      ::close(sv[1]);
      throw PluginFailure("fork failed for counter plugin");
    }
    if (pid == 0) {
      ::dup2(sv[1], STDIN_FILENO);
      ::dup2(sv[1], STDOUT_FILENO);
      ::execl(path_.c_str(), path_.c_str(), static_cast<char*>(nullptr));
      ::_exit(127);
    }
    ::close(sv[1]);
    fd_ = sv[0];
    pid_ = pid;
  }

  PluginCounter(const PluginCounter&) = delete;
  PluginCounter& operator=(const PluginCounter&) = delete;

  ~PluginCounter() override {
    if (fd_ >= 0) {
      ::shutdown(fd_, SHUT_WR);
      ::close(fd_);
    }
    if (pid_ > 0) {
      int status = 0;
      ::waitpid(pid_, &status, 0);
    }
  }

  std::size_t count(std::string_view text) override {
    std::lock_guard<std::mutex> lock(mu_);
    if (fd_ < 0) throw PluginFailure("counter plugin is no longer running: " + path_);
    std::string request = std::to_string(text.size());
    request += '\n';
    request.append(text);
    send_all(request);
    const std::string line = read_line();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || ptr != line.data() + line.size() || line.empty()) {
      fail("counter plugin sent a malformed response: '" + line + "'");
    }
    return value;
  }

  std::string name() const override { return "plugin:" + path_; }

 private:
  [[noreturn]] void fail(const std::string& why) {
    if (fd_ >= 0) {
      ::close(fd_);
      fd_ = -1;
    }
    throw PluginFailure(why);
  }

  void send_all(std::string_view data) {
    while (!data.empty()) {
      const ssize_t w = ::send(fd_, data.data(), data.size(), MSG_NOSIGNAL);
      if (w < 0) {
        if (errno == EINTR) continue;
        fail("counter plugin closed its input: " + path_);
      }
      data.remove_prefix(static_cast<std::size_t>(w));
    }
  }

  std::string read_line() {
    while (true) {
      const auto nl = pending_.find('\n');
      if (nl != std::string::npos) {
        std::string line = pending_.substr(0, nl);
        pending_.erase(0, nl + 1);
        return line;
      }
      pollfd p{fd_, POLLIN, 0};
      const int ready = ::poll(&p, 1, timeout_ms_);
      if (ready == 0) fail("counter plugin timed out: " + path_);
      if (ready < 0) {
        if (errno == EINTR) continue;
        fail("poll failed on counter plugin");
      }
      char buf[256];
      const ssize_t r = ::read(fd_, buf, sizeof buf);
      if (r < 0 && errno == EINTR) continue;
      if (r <= 0) fail("counter plugin exited: " + path_);
      pending_.append(buf, static_cast<std::size_t>(r));
    }
  }

  std::string path_;
  int timeout_ms_;
  int fd_ = -1;
  pid_t pid_ = -1;
  std::string pending_;
  std::mutex mu_;
};

/// `bytes`, `chars` or `plugin:<path>`.
inline std::unique_ptr<TokenCounter> make_counter(std::string_view selector) {
  if (selector == "bytes") return std::make_unique<ByteCounter>();
  if (selector == "chars") return std::make_unique<CharCounter>();
  constexpr std::string_view kPlugin = "plugin:";
  if (selector.substr(0, kPlugin.size()) == kPlugin && selector.size() > kPlugin.size()) {
    return std::make_unique<PluginCounter>(std::string(selector.substr(kPlugin.size())));
  }
  throw std::invalid_argument("unknown counter '" + std::string(selector) + "' (bytes, chars, plugin:<path>)");
}

/// Tokens saved by writing the k headers once instead of once per row:
/// (n - 1) * k * (mean_header_tokens + struct_tokens).
inline double predicted_savings(std::size_t n, std::size_t k, double mean_header_tokens, double struct_tokens) {
  if (n < 1 || k < 1) throw std::invalid_argument("predicted_savings needs n >= 1 and k >= 1");
  return static_cast<double>(n - 1) * static_cast<double>(k) * (mean_header_tokens + struct_tokens);
}

inline std::int64_t decimal_digits(std::uint64_t n) {
  std::int64_t d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

/// Exact byte difference between JsonCompact and Zen (Compact spacing, row
/// count on) for an n-row grid whose rows all carry every header, with
/// identifier-shaped headers and no bare strings or implicit nulls.
///
/// Each row drops `"key":` per key (K + 3k bytes), its braces, and trades
/// the row comma for a semicolon. The header line adds back K + k - 1 bytes
/// and the prefix adds digits(n) + 1.
inline std::int64_t predicted_byte_savings(std::size_t n, const std::vector<std::string>& headers) {
  const auto N = static_cast<std::int64_t>(n);
  const auto k = static_cast<std::int64_t>(headers.size());
  std::int64_t K = 0;
  for (const auto& h : headers) K += static_cast<std::int64_t>(h.size());
  return (N - 1) * (K + 3 * k) + 2 * (N - 1) + 2 * k + 1 - decimal_digits(n);
}

enum class ReportFormat : std::uint8_t { JsonPretty, JsonCompact, Zen, ZenBare };
inline constexpr std::array<ReportFormat, 4> kReportFormats = {ReportFormat::JsonPretty, ReportFormat::JsonCompact,
                                                               ReportFormat::Zen, ReportFormat::ZenBare};

constexpr std::string_view report_format_label(ReportFormat f) noexcept {
  switch (f) {
    case ReportFormat::JsonPretty: return "json-pretty";
    case ReportFormat::JsonCompact: return "json-compact";
    case ReportFormat::Zen: return "zen";
    case ReportFormat::ZenBare: return "zen-bare";
  }
  return "?";
}

struct SavingsReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::array<std::optional<std::size_t>, 4> sizes{};  // indexed by ReportFormat; Zen slots empty when ineligible
  std::optional<double> mean_header_tokens;
  std::optional<double> struct_tokens;
  std::optional<double> predicted_delta_tokens;

  std::optional<std::size_t> size(ReportFormat f) const { return sizes[static_cast<std::size_t>(f)]; }

  bool zen_eligible() const { return size(ReportFormat::Zen).has_value(); }

  /// Percentage change relative to JsonCompact (negative means smaller).
  std::optional<double> delta_vs_compact(ReportFormat f) const {
    const auto s = size(f);
    const auto base = size(ReportFormat::JsonCompact);
    if (!s || !base || *base == 0) return std::nullopt;
    return (static_cast<double>(*s) - static_cast<double>(*base)) / static_cast<double>(*base) * 100.0;
  }
};

inline SerializeOptions report_options(ReportFormat f, Spacing spacing) {
  SerializeOptions o;
  switch (f) {
    case ReportFormat::JsonPretty: o.mode = OutputMode::JsonPretty; break;
    case ReportFormat::JsonCompact: o.mode = OutputMode::JsonCompact; break;
    case ReportFormat::Zen: o.mode = OutputMode::Zen; break;
    case ReportFormat::ZenBare:
      o.mode = OutputMode::Zen;
      o.bare_strings = true;
      break;
  }
  o.spacing = spacing;
  return o;
}

/// Serializes `v` in the four report formats and counts each. Zen formats
/// use `spacing`; the listing style (Spaced) is the default.
inline SavingsReport savings_report(const Value& v, TokenCounter& counter, Spacing spacing = Spacing::Spaced) {
  SavingsReport r;
  GridPlan plan;
  if (v.is_array()) {
    r.rows = v.as_array().size();
    plan = plan_grid(v.as_array());
  }
  for (auto f : kReportFormats) {
    const bool zen = f == ReportFormat::Zen || f == ReportFormat::ZenBare;
    if (zen && !plan.eligible) continue;
    r.sizes[static_cast<std::size_t>(f)] = counter.count(serialize(v, report_options(f, spacing)));
  }
  if (plan.eligible) {
    r.cols = plan.headers.size();
    double header_total = 0;
    for (const auto& h : plan.headers) header_total += static_cast<double>(counter.count(h));
    r.mean_header_tokens = header_total / static_cast<double>(plan.headers.size());
    // Structure around one key: quotes, colon and braces of a single-pair object.
    const std::string& h0 = plan.headers.front();
    const std::string pair = "{" + serialize(Value(h0)) + ":0}";
    const double s = static_cast<double>(counter.count(pair)) - static_cast<double>(counter.count(h0)) -
                     static_cast<double>(counter.count("0"));
    r.struct_tokens = s < 0 ? 0.0 : s;
    r.predicted_delta_tokens = predicted_savings(r.rows, r.cols, *r.mean_header_tokens, *r.struct_tokens);
  }
  return r;
}

}  // namespace jton
