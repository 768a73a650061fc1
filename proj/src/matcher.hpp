#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "char_stream.hpp"
#include "fingerprint.hpp"
#include "space_meter.hpp"
#include "text_oracle.hpp"

namespace asymstream {

enum class MatchMode {
  /// Fingerprint equality is trusted. Linear time, small chance of locking
  /// onto a colliding window.
  kRandomized,
  /// Every fingerprint equality is confirmed character by character before
  /// acceptance; exact with probability 1 at quadratic worst-case time.
  kVerified,
};

/// Interval [lo, hi] of the text, 1-based inclusive. hi = lo-1 encodes the
/// empty interval.
struct Interval {
  int64_t lo = 0;
  int64_t hi = 0;
  int64_t length() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One-pass matcher maintaining the leftmost occurrence window of the
/// streamed pattern inside the text.
///
/// While alive with a pattern of length k, [lo, hi] spans k characters and
/// T[lo..hi] equals the pattern so far (with probability 1 in verified mode).
/// Both pointers only ever move right; once no window can match, the session
/// is terminally dead. Persistent state is a fixed number of words no matter
/// how long the inputs are.
class MatchSession {
 public:
  static constexpr int64_t kStateWords = 10;

  MatchSession(TextView text, const FingerprintContext& ctx, MatchMode mode,
               SpaceMeter* meter = nullptr);

  /// Feeds the next pattern character. Returns the current window while a
  /// match is still possible, nullopt once it is not (terminal). Throws
  /// ContractViolation when pushed after going dead.
  std::optional<Interval> push(uint8_t c);

  bool alive() const noexcept { return alive_; }
  Interval window() const noexcept { return {ell_, r_}; }
  int64_t pattern_length() const noexcept { return pattern_fp_.length; }

 private:
  bool candidate_verified(uint8_t c) const;

  TextView text_;
  const FingerprintContext* ctx_;
  MatchMode mode_;
  MeterCharge charge_;

  int64_t ell_ = 1;
  int64_t r_ = 0;
  int64_t prev_ell_ = 1;  // start of the last verified window
  bool alive_ = true;
  Fingerprint pattern_fp_;
  Fingerprint window_fp_;
};

struct MatchOutcome {
  bool found = false;
  Interval window;
};

/// Consumes the stream in one pass and reports the leftmost occurrence of the
/// full pattern, or NotFound. An empty pattern yields the empty interval
/// [1, 0].
MatchOutcome match_run(TextView text, CharStream& stream, const FingerprintContext& ctx,
                       MatchMode mode, SpaceMeter* meter = nullptr);

/// Online search for the fixed text substring T[start..start+length-1] inside
/// a stream. Persistent state: the length of the longest stream suffix that is
/// a prefix of the needle, plus fingerprints computed on demand from the text.
/// Worst-case quadratic re-scan per mismatch; never more than constant words.
class FixedPatternSearch {
 public:
  static constexpr int64_t kStateWords = 4;

  FixedPatternSearch(TextView text, int64_t start, int64_t length, const FingerprintContext& ctx,
                     SpaceMeter* meter = nullptr);

  /// Feeds one stream character; returns the 1-based stream position when the
  /// last `length` characters equal the needle.
  std::optional<int64_t> push(uint8_t c);

  int64_t matched_prefix() const noexcept { return matched_; }

 private:
  TextView text_;
  const FingerprintContext* ctx_;
  MeterCharge charge_;

  int64_t start_;
  int64_t length_;
  int64_t matched_ = 0;
  int64_t stream_pos_ = 0;
};

}  // namespace asymstream
