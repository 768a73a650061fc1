#include "matcher.hpp"

#include "errors.hpp"

namespace asymstream {

MatchSession::MatchSession(TextView text, const FingerprintContext& ctx, MatchMode mode,
                           SpaceMeter* meter)
    : text_(text), ctx_(&ctx), mode_(mode), charge_(meter, kStateWords) {}

// The candidate window [ell_, r_] must equal the previous verified window
// plus c. The previous window is the pattern so far, which is what makes a
// character-exact check possible without storing the pattern.
bool MatchSession::candidate_verified(uint8_t c) const {
  int64_t k = r_ - ell_ + 1;
  if (ell_ != prev_ell_) {
    for (int64_t i = 0; i < k - 1; ++i) {
      if (text_.read(ell_ + i) != text_.read(prev_ell_ + i)) return false;
    }
  }
  return text_.read(r_) == c;
}

std::optional<Interval> MatchSession::push(uint8_t c) {
  if (!alive_) throw ContractViolation("push on a dead match session");
  int64_t n = text_.length();

  // A character the text does not contain can never be matched.
  if (!ctx_->in_alphabet(c)) {
    alive_ = false;
    return std::nullopt;
  }

  pattern_fp_ = append_right(pattern_fp_, c, *ctx_);
  r_ += 1;
  if (r_ > n) {
    alive_ = false;
    return std::nullopt;
  }
  window_fp_ = append_right(window_fp_, text_.read(r_), *ctx_);

  for (;;) {
    if (window_fp_.value == pattern_fp_.value &&
        (mode_ == MatchMode::kRandomized || candidate_verified(c))) {
      break;
    }
    uint8_t out = text_.read(ell_);
    ell_ += 1;
    r_ += 1;
    if (r_ > n) {
      alive_ = false;
      return std::nullopt;
    }
    window_fp_ = slide_window(window_fp_, out, text_.read(r_), *ctx_);
  }
  prev_ell_ = ell_;
  return Interval{ell_, r_};
}

MatchOutcome match_run(TextView text, CharStream& stream, const FingerprintContext& ctx,
                       MatchMode mode, SpaceMeter* meter) {
  MatchSession session(text, ctx, mode, meter);
  // Once the session dies the rest of the stream is drained unprocessed; the
  // model still owes the source exactly one pass.
  while (auto c = stream.next()) {
    if (session.alive()) session.push(*c);
  }
  if (!session.alive()) return {};
  return {true, session.window()};
}

FixedPatternSearch::FixedPatternSearch(TextView text, int64_t start, int64_t length,
                                       const FingerprintContext& ctx, SpaceMeter* meter)
    : text_(text), ctx_(&ctx), charge_(meter, kStateWords), start_(start), length_(length) {
  if (start < 1 || length < 1 || start + length - 1 > text.length())
    throw std::out_of_range("fixed pattern range invalid");
}

std::optional<int64_t> FixedPatternSearch::push(uint8_t c) {
  ++stream_pos_;
  // Needle character j (1-based) lives at text position start_ + j - 1.
  if (matched_ < length_ && ctx_->in_alphabet(c) &&
      text_.read(start_ + matched_) == c) {
    ++matched_;
  } else {
    int64_t k = matched_;
    matched_ = 0;
    if (ctx_->in_alphabet(c)) {
      // Longest suffix of needle[1..k]*c that is a prefix of the needle. The
      // prefix comparison goes through fingerprints built on demand, then a
      // character confirmation so that emissions stay exact.
      for (int64_t j = k; j >= 1; --j) {
        if (text_.read(start_ + j - 1) != c) continue;
        if (j >= 2) {
          Fingerprint a = substring_hash(text_, start_, start_ + j - 2, *ctx_);
          Fingerprint b = substring_hash(text_, start_ + k - j + 1, start_ + k - 1, *ctx_);
          if (a != b) continue;
          bool equal = true;
          for (int64_t t = 0; t < j - 1 && equal; ++t) {
            equal = text_.read(start_ + t) == text_.read(start_ + k - j + 1 + t);
          }
          if (!equal) continue;
        }
        matched_ = j;
        break;
      }
    }
  }
  if (matched_ == length_) return stream_pos_;
  return std::nullopt;
}

}  // namespace asymstream
