#pragma once

// Stage 1: structural scan.
//
// Every byte outside strings and comments that is one of { } [ ] : ; , "
// gets its offset recorded in the vector for its class. String interiors
// and comments are reported as bitmasks so stage 2 never has to re-discover
// them. Two implementations exist: a byte-at-a-time reference and an AVX2
// path that classifies 64 bytes per step with a nibble lookup. They must
// produce identical output for every input, including malformed ones.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string_view>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define JTON_HAVE_X86_SIMD 1
#else
#define JTON_HAVE_X86_SIMD 0
#endif

#include "jton/error.hpp"

namespace jton {

enum class Structural : std::uint8_t {
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Colon,
  Semicolon,
  Comma,
  Quote,
};

inline constexpr std::size_t kStructuralClasses = 8;
inline constexpr char kStructuralChars[kStructuralClasses] = {'{', '}', '[', ']', ':', ';', ',', '"'};

/// Fixed-size bitset over input bytes.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept {
    return i < bits_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  /// ORs 64 bits starting at bit `offset`; offset + 64 must not exceed size().
  void or_bits(std::size_t offset, std::uint64_t bits) noexcept {
    if (bits == 0) return;
    const std::size_t w = offset >> 6;
    const unsigned shift = static_cast<unsigned>(offset & 63);
    words_[w] |= bits << shift;
    if (shift != 0 && w + 1 < words_.size()) words_[w + 1] |= bits >> (64 - shift);
  }

  /// First clear bit at or after `i` (size() if none).
  std::size_t next_clear(std::size_t i) const noexcept {
    while (i < bits_) {
      const std::uint64_t w = ~words_[i >> 6] & (~std::uint64_t{0} << (i & 63));
      if (w != 0) {
        const std::size_t found = (i & ~std::size_t{63}) + static_cast<std::size_t>(std::countr_zero(w));
        return found < bits_ ? found : bits_;
      }
      i = (i & ~std::size_t{63}) + 64;
    }
    return bits_;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const noexcept { return count() == 0; }

  bool intersects(const Bitmask& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  bool operator==(const Bitmask&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StructuralIndex {
  std::array<std::vector<std::size_t>, kStructuralClasses> positions;
  Bitmask string_mask;   // bytes strictly inside string literals
  Bitmask comment_mask;  // comment bytes, delimiters included

  const std::vector<std::size_t>& of(Structural c) const noexcept {
    return positions[static_cast<std::size_t>(c)];
  }

  bool operator==(const StructuralIndex&) const = default;
};

namespace detail {

inline constexpr std::uint8_t kNotStructural = 0xFF;

inline constexpr std::array<std::uint8_t, 256> kClassOf = [] {
  std::array<std::uint8_t, 256> t{};
  t.fill(kNotStructural);
  for (std::size_t c = 0; c < kStructuralClasses; ++c) {
    t[static_cast<unsigned char>(kStructuralChars[c])] = static_cast<std::uint8_t>(c);
  }
  return t;
}();

struct ScanState {
  enum class Comment : std::uint8_t { None, Line, Block };
  bool in_string = false;
  bool escaped = false;  // next byte is escaped (only inside strings)
  Comment comment = Comment::None;
  std::size_t string_start = 0;
  std::size_t comment_start = 0;
};

inline StructuralIndex make_index(std::size_t n) {
  StructuralIndex idx;
  idx.string_mask = Bitmask(n);
  idx.comment_mask = Bitmask(n);
  // Rough guess for tabular input; vectors grow if needed.
  for (auto& v : idx.positions) v.reserve(n / 16 + 4);
  return idx;
}

/// Processes bytes from `pos` until at least `end`; may overrun `end` by one
/// byte to finish a two-byte comment delimiter. Returns the resume position.
inline std::size_t scan_scalar_range(std::string_view in, std::size_t pos, std::size_t end,
                                     ScanState& st, StructuralIndex& idx) {
  const std::size_t n = in.size();
  using C = ScanState::Comment;
  std::size_t i = pos;
  while (i < end) {
    const char c = in[i];
    if (st.comment == C::Line) {
      if (c == '\n') {
        st.comment = C::None;
      } else {
        idx.comment_mask.set(i);
      }
      ++i;
      continue;
    }
    if (st.comment == C::Block) {
      idx.comment_mask.set(i);
      if (c == '*' && i + 1 < n && in[i + 1] == '/') {
        idx.comment_mask.set(i + 1);
        st.comment = C::None;
        i += 2;
        continue;
      }
      ++i;
      continue;
    }
    if (st.in_string) {
      if (st.escaped) {
        st.escaped = false;
        idx.string_mask.set(i);
      } else if (c == '\\') {
        st.escaped = true;
        idx.string_mask.set(i);
      } else if (c == '"') {
        idx.positions[static_cast<std::size_t>(Structural::Quote)].push_back(i);
        st.in_string = false;
      } else {
        idx.string_mask.set(i);
      }
      ++i;
      continue;
    }
    if (c == '"') {
      idx.positions[static_cast<std::size_t>(Structural::Quote)].push_back(i);
      st.in_string = true;
      st.string_start = i;
    } else if (c == '/' && i + 1 < n && (in[i + 1] == '/' || in[i + 1] == '*')) {
      st.comment = in[i + 1] == '/' ? C::Line : C::Block;
      st.comment_start = i;
      idx.comment_mask.set(i);
      idx.comment_mask.set(i + 1);
      i += 2;
      continue;
    } else if (c == '\\') {
      throw ParseError(ErrorKind::UnexpectedChar, i, "backslash outside of a string");
    } else {
      const std::uint8_t cls = kClassOf[static_cast<unsigned char>(c)];
      if (cls != kNotStructural) idx.positions[cls].push_back(i);
    }
    ++i;
  }
  return i;
}

inline void finish_scan(const ScanState& st) {
  if (st.in_string) {
    throw ParseError(ErrorKind::UnterminatedString, st.string_start, "string literal is never closed");
  }
  if (st.comment == ScanState::Comment::Block) {
    throw ParseError(ErrorKind::UnterminatedComment, st.comment_start, "block comment is never closed");
  }
}

inline bool force_scalar_requested() noexcept {
  const char* v = std::getenv("JTON_FORCE_SCALAR");
  return v != nullptr && v[0] != '\0' && !(v[0] == '0' && v[1] == '\0');
}

#if JTON_HAVE_X86_SIMD

inline bool cpu_has_avx2() noexcept {
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return ok;
}

inline std::uint64_t prefix_xor(std::uint64_t x) noexcept {
  x ^= x << 1;
  x ^= x << 2;
  x ^= x << 4;
  x ^= x << 8;
  x ^= x << 16;
  x ^= x << 32;
  return x;
}

// Bits of bytes escaped by an odd-length backslash run. `carry` says whether
// the first byte of this block is escaped and is updated for the next block.
inline std::uint64_t escaped_bits(std::uint64_t backslash, bool& carry) noexcept {
  constexpr std::uint64_t kEven = 0x5555555555555555ULL;
  const std::uint64_t prev = carry ? 1 : 0;
  backslash &= ~prev;
  const std::uint64_t follows_escape = (backslash << 1) | prev;
  const std::uint64_t odd_starts = backslash & ~kEven & ~follows_escape;
  std::uint64_t even_starts_sum = 0;
  carry = __builtin_add_overflow(odd_starts, backslash, &even_starts_sum);
  const std::uint64_t invert = even_starts_sum << 1;
  return (kEven ^ invert) & follows_escape;
}

struct BlockMasks {
  std::uint64_t quote;
  std::uint64_t backslash;
  std::uint64_t structural;  // { } [ ] : ; ,
  std::uint64_t slash;
};

__attribute__((target("avx2"))) inline BlockMasks classify_block(const char* p) noexcept {
  // Low/high nibble tables; a byte is structural iff lo[b & 15] & hi[b >> 4] != 0.
  //   bit0: { }   bit1: [ ]   bit2: : ;   bit3: ,
  const __m256i lo_table = _mm256_setr_epi8(0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 7, 8, 3, 0, 0,  //
                                            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 7, 8, 3, 0, 0);
  const __m256i hi_table = _mm256_setr_epi8(0, 0, 8, 4, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0,  //
                                            0, 0, 8, 4, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0);
  const __m256i low_nibble = _mm256_set1_epi8(0x0F);
  const __m256i zero = _mm256_setzero_si256();

  std::uint32_t quote[2], bs[2], st[2], sl[2];
  for (int h = 0; h < 2; ++h) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 32 * h));
    const __m256i lo = _mm256_shuffle_epi8(lo_table, _mm256_and_si256(v, low_nibble));
    const __m256i hi = _mm256_shuffle_epi8(hi_table, _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble));
    const __m256i cls = _mm256_and_si256(lo, hi);
    st[h] = ~static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(cls, zero)));
    quote[h] = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, _mm256_set1_epi8('"'))));
    bs[h] = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, _mm256_set1_epi8('\\'))));
    sl[h] = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, _mm256_set1_epi8('/'))));
  }
  auto join = [](const std::uint32_t* w) { return std::uint64_t{w[0]} | (std::uint64_t{w[1]} << 32); };
  return {join(quote), join(bs), join(st), join(sl)};
}

inline void record_bits(std::uint64_t bits, std::size_t base, const char* bytes, StructuralIndex& idx) {
  while (bits != 0) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
    const std::uint8_t cls = kClassOf[static_cast<unsigned char>(bytes[bit])];
    idx.positions[cls].push_back(base + bit);
    bits &= bits - 1;
  }
}

inline StructuralIndex scan_avx2(std::string_view in) {
  const std::size_t n = in.size();
  StructuralIndex idx = make_index(n);
  ScanState st;
  std::size_t pos = 0;
  while (pos + 64 <= n) {
    if (st.comment != ScanState::Comment::None) {
      pos = scan_scalar_range(in, pos, pos + 64, st, idx);
      continue;
    }
    const BlockMasks m = classify_block(in.data() + pos);
    if (m.slash != 0) {
      // Comment state machines do not vectorize; let the reference path take this block.
      pos = scan_scalar_range(in, pos, pos + 64, st, idx);
      continue;
    }
    const bool was_in_string = st.in_string;
    const std::uint64_t escaped = escaped_bits(m.backslash, st.escaped);
    const std::uint64_t quotes = m.quote & ~escaped;
    const std::uint64_t inside = prefix_xor(quotes) ^ (was_in_string ? ~std::uint64_t{0} : 0);

    const std::uint64_t stray = m.backslash & ~inside;
    if (stray != 0) {
      throw ParseError(ErrorKind::UnexpectedChar, pos + static_cast<std::size_t>(std::countr_zero(stray)),
                       "backslash outside of a string");
    }

    idx.string_mask.or_bits(pos, inside & ~quotes);
    record_bits((m.structural & ~inside) | quotes, pos, in.data() + pos, idx);

    st.in_string = (inside >> 63) != 0;
    if (!st.in_string) st.escaped = false;
    if (st.in_string && quotes != 0) {
      st.string_start = pos + 63 - static_cast<std::size_t>(std::countl_zero(quotes));
    }
    pos += 64;
  }
  scan_scalar_range(in, pos, n, st, idx);
  finish_scan(st);
  return idx;
}

#endif  // JTON_HAVE_X86_SIMD

}  // namespace detail

/// Byte-at-a-time reference scan.
inline StructuralIndex scan_structural_scalar(std::string_view input) {
  StructuralIndex idx = detail::make_index(input.size());
  detail::ScanState st;
  detail::scan_scalar_range(input, 0, input.size(), st, idx);
  detail::finish_scan(st);
  return idx;
}

/// True when scan_structural_accelerated will actually use wide registers.
inline bool accelerated_scan_active() noexcept {
#if JTON_HAVE_X86_SIMD
  return detail::cpu_has_avx2() && !detail::force_scalar_requested();
#else
  return false;
#endif
}

/// Same output as scan_structural_scalar; uses AVX2 when the CPU has it and
/// JTON_FORCE_SCALAR is not set.
inline StructuralIndex scan_structural_accelerated(std::string_view input) {
#if JTON_HAVE_X86_SIMD
  if (accelerated_scan_active()) return detail::scan_avx2(input);
#endif
  return scan_structural_scalar(input);
}

/// Bytes strictly inside string literals (escape-aware, comment-aware).
inline Bitmask compute_string_mask(std::string_view input) {
  return scan_structural_accelerated(input).string_mask;
}

}  // namespace jton
