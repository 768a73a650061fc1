#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "char_stream.hpp"
#include "matcher.hpp"

namespace asymstream {

/// Interval of the longest suffix of T[lo..hi]*c that occurs anywhere in the
/// text, or nullopt when no suffix occurs. Pass lo = hi = -1 for an empty
/// window. Runs the streaming matcher over the reversed text with the
/// reversed candidate as its pattern, so it needs constant words and
/// O(n + window) time per call.
std::optional<Interval> longest_suffix_in_text(TextView text, int64_t lo, int64_t hi, uint8_t c,
                                               const FingerprintContext& ctx, MatchMode mode,
                                               SpaceMeter* meter = nullptr);

struct LcsStep {
  int64_t lo = -1;  // -1,-1 when the window is empty
  int64_t hi = -1;
  int64_t best = 0;
};

/// One-pass longest-common-substring session. After each push, [lo, hi]
/// brackets the longest suffix of the stream so far that occurs in the text,
/// and best carries the running maximum window length.
class LcsSession {
 public:
  static constexpr int64_t kStateWords = 5;

  LcsSession(TextView text, const FingerprintContext& ctx, MatchMode mode,
             SpaceMeter* meter = nullptr);

  LcsStep push(uint8_t c);

  int64_t best() const noexcept { return best_; }
  Interval best_window() const noexcept { return {best_lo_, best_hi_}; }
  LcsStep state() const noexcept { return {lo_, hi_, best_}; }

 private:
  TextView text_;
  const FingerprintContext* ctx_;
  MatchMode mode_;
  SpaceMeter* meter_;
  MeterCharge charge_;

  int64_t lo_ = -1;
  int64_t hi_ = -1;
  int64_t best_ = 0;
  int64_t best_lo_ = -1;
  int64_t best_hi_ = -1;
};

struct LcsOutcome {
  int64_t length = 0;
  Interval window{-1, -1};  // a text interval realizing the maximum, if any
};

/// One pass over the stream; exact in verified mode, whp in randomized mode.
LcsOutcome lcs_exact(TextView text, CharStream& stream, const FingerprintContext& ctx,
                     MatchMode mode, SpaceMeter* meter = nullptr);

/// Parameters of one solution-size guess d: probes of length ceil((1-eps)*d)
/// are launched every ceil(eps*d) stream characters.
struct ApproxConfig {
  double epsilon = 0.1;
  int64_t d = 1;

  int64_t mark_spacing() const;
  int64_t probe_length() const;
  bool valid() const;
};

/// All probe instances for one guess, fed in lockstep. A probe is a match
/// session whose pattern is the next probe_length stream characters; the
/// guess fires as soon as any probe survives its full length. At most
/// ceil(probe/spacing)+1 probes are alive at once.
class ApproxProbeSet {
 public:
  static constexpr int64_t kDriverWords = 8;
  static constexpr int64_t kProbeExtraWords = 2;

  ApproxProbeSet(TextView text, const FingerprintContext& ctx, ApproxConfig cfg, MatchMode mode,
                 SpaceMeter* meter = nullptr);

  void push(uint8_t c);

  bool fired() const noexcept { return fired_; }
  int64_t probe_length() const noexcept { return probe_length_; }
  int64_t alive_probes() const noexcept { return static_cast<int64_t>(probes_.size()); }
  int64_t max_concurrent_seen() const noexcept { return max_concurrent_; }
  int64_t concurrency_cap() const noexcept;

 private:
  struct Probe {
    MatchSession session;
    int64_t fed = 0;
    MeterCharge charge;
  };

  TextView text_;
  const FingerprintContext* ctx_;
  MatchMode mode_;
  SpaceMeter* meter_;
  MeterCharge charge_;

  int64_t spacing_;
  int64_t probe_length_;
  int64_t stream_pos_ = 0;
  bool fired_ = false;
  int64_t max_concurrent_ = 0;
  std::deque<Probe> probes_;
};

/// Decision procedure for a single guess: drains the stream once and returns
/// probe_length when some probe survived, nullopt otherwise. If the true
/// common-substring length is at least d, it fires (surely in verified mode).
std::optional<int64_t> lcs_approx_decide(TextView text, CharStream& stream,
                                         const FingerprintContext& ctx, ApproxConfig cfg,
                                         MatchMode mode, SpaceMeter* meter = nullptr);

struct ApproxOutcome {
  int64_t length = 0;
  uint64_t passes = 0;
};

/// Guess-ladder driver with category scheduling: guesses d = ceil(n*(1-eps)^j)
/// are grouped into ceil(1/kappa) categories of multiplicative width n^kappa,
/// highest first, one pass per category with all of the category's guesses fed
/// simultaneously. Stops at the first category that fires and returns the
/// largest fired probe length. A final one-pass single-character check settles
/// whether the answer is 1 or 0 when no guess fired.
ApproxOutcome lcs_approx_multipass(TextView text, CharStream& stream,
                                   const FingerprintContext& ctx, double epsilon, double kappa,
                                   MatchMode probe_mode, SpaceMeter* meter = nullptr);

/// Sequential ladder descent, one guess per pass, stopping at the first fired
/// guess. More passes, smaller working state.
ApproxOutcome lcs_approx_logrounds(TextView text, CharStream& stream,
                                   const FingerprintContext& ctx, double epsilon,
                                   MatchMode probe_mode, SpaceMeter* meter = nullptr);

/// The descending guess ladder for a text of length n, deduplicated, down to
/// 2. (The final d = 1 guess is the drivers' single-character check.)
std::vector<int64_t> approx_guess_ladder(int64_t n, double epsilon);

}  // namespace asymstream
