#include "lcs.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "errors.hpp"

namespace asymstream {

std::optional<Interval> longest_suffix_in_text(TextView text, int64_t lo, int64_t hi, uint8_t c,
                                               const FingerprintContext& ctx, MatchMode mode,
                                               SpaceMeter* meter) {
  int64_t n = text.length();
  TextView reversed = text.reverse();
  MatchSession session(reversed, ctx, mode, meter);

  // Prefixes of the reversed candidate are reversed suffixes of the candidate
  // T[lo..hi]*c, so the last prefix the matcher accepts is the longest suffix
  // occurring in the text.
  std::optional<Interval> last;
  auto feed = [&](uint8_t ch) {
    auto window = session.push(ch);
    if (window) last = window;
    return window.has_value();
  };

  if (!feed(c)) return std::nullopt;
  if (lo >= 1) {
    for (int64_t p = hi; p >= lo; --p) {
      if (!feed(text.read(p))) break;
    }
  }
  if (!last) return std::nullopt;
  // Map the reversed-text interval back onto the forward text.
  return Interval{n - last->hi + 1, n - last->lo + 1};
}

LcsSession::LcsSession(TextView text, const FingerprintContext& ctx, MatchMode mode,
                       SpaceMeter* meter)
    : text_(text), ctx_(&ctx), mode_(mode), meter_(meter), charge_(meter, kStateWords) {}

LcsStep LcsSession::push(uint8_t c) {
  int64_t old_len = lo_ >= 1 ? hi_ - lo_ + 1 : 0;

  if (!ctx_->in_alphabet(c)) {
    // Every suffix of window*c ends with c, and c never occurs in the text.
    lo_ = hi_ = -1;
    return state();
  }

  auto window = longest_suffix_in_text(text_, lo_, hi_, c, *ctx_, mode_, meter_);
  if (window) {
    lo_ = window->lo;
    hi_ = window->hi;
  } else {
    lo_ = hi_ = -1;
  }

  int64_t new_len = lo_ >= 1 ? hi_ - lo_ + 1 : 0;
  // The new longest matching suffix can exceed the old one by at most the
  // character just appended.
  if (new_len > old_len + 1)
    throw ContractViolation("suffix window grew by more than one character");

  if (new_len > best_) {
    best_ = new_len;
    best_lo_ = lo_;
    best_hi_ = hi_;
  }
  return state();
}

LcsOutcome lcs_exact(TextView text, CharStream& stream, const FingerprintContext& ctx,
                     MatchMode mode, SpaceMeter* meter) {
  LcsSession session(text, ctx, mode, meter);
  while (auto c = stream.next()) session.push(*c);
  return {session.best(), session.best_window()};
}

int64_t ApproxConfig::mark_spacing() const {
  return static_cast<int64_t>(std::ceil(epsilon * static_cast<double>(d)));
}

int64_t ApproxConfig::probe_length() const {
  return static_cast<int64_t>(std::ceil((1.0 - epsilon) * static_cast<double>(d)));
}

bool ApproxConfig::valid() const {
  if (!(epsilon > 0.0 && epsilon < 1.0) || d < 1) return false;
  int64_t spacing = mark_spacing();
  int64_t probe = probe_length();
  return spacing >= 1 && probe >= 1 && probe + spacing <= d + 1;
}

ApproxProbeSet::ApproxProbeSet(TextView text, const FingerprintContext& ctx, ApproxConfig cfg,
                               MatchMode mode, SpaceMeter* meter)
    : text_(text),
      ctx_(&ctx),
      mode_(mode),
      meter_(meter),
      charge_(meter, kDriverWords),
      spacing_(cfg.mark_spacing()),
      probe_length_(cfg.probe_length()) {
  if (!cfg.valid()) throw std::invalid_argument("approx guess parameters invalid");
}

int64_t ApproxProbeSet::concurrency_cap() const noexcept {
  return (probe_length_ + spacing_ - 1) / spacing_ + 1;
}

void ApproxProbeSet::push(uint8_t c) {
  ++stream_pos_;
  if (fired_) return;  // answer for this guess is settled

  if ((stream_pos_ - 1) % spacing_ == 0) {
    probes_.push_back(Probe{MatchSession(text_, *ctx_, mode_, meter_), 0,
                            MeterCharge(meter_, kProbeExtraWords)});
  }
  max_concurrent_ = std::max(max_concurrent_, static_cast<int64_t>(probes_.size()));

  for (size_t i = 0; i < probes_.size();) {
    Probe& probe = probes_[i];
    bool keep = probe.session.push(c).has_value();
    if (keep && ++probe.fed == probe_length_) {
      fired_ = true;
      probes_.clear();
      return;
    }
    if (keep) {
      ++i;
    } else {
      probes_.erase(probes_.begin() + static_cast<long>(i));
    }
  }
}

std::optional<int64_t> lcs_approx_decide(TextView text, CharStream& stream,
                                         const FingerprintContext& ctx, ApproxConfig cfg,
                                         MatchMode mode, SpaceMeter* meter) {
  ApproxProbeSet set(text, ctx, cfg, mode, meter);
  while (auto c = stream.next()) set.push(*c);
  if (set.fired()) return set.probe_length();
  return std::nullopt;
}

std::vector<int64_t> approx_guess_ladder(int64_t n, double epsilon) {
  std::vector<int64_t> ladder;
  double value = static_cast<double>(n);
  for (int64_t last = -1; value > 1.0; value *= 1.0 - epsilon) {
    auto d = static_cast<int64_t>(std::ceil(value));
    if (d < 2) break;
    if (d != last) {
      ladder.push_back(d);
      last = d;
    }
  }
  return ladder;
}

namespace {

// Final ladder step: does any stream character occur in the text at all?
// One pass; a 256-entry cache keeps it to one text scan per distinct byte.
bool any_common_character(TextView text, CharStream& stream, SpaceMeter* meter) {
  MeterCharge charge(meter, bytes_to_words(256));
  std::array<int8_t, 256> seen{};  // 0 unknown, 1 present, -1 absent
  int64_t n = text.length();
  while (auto c = stream.next()) {
    int8_t& state = seen[*c];
    if (state == 0) {
      state = -1;
      for (int64_t i = 1; i <= n; ++i) {
        if (text.read(i) == *c) {
          state = 1;
          break;
        }
      }
    }
    if (state == 1) return true;
  }
  return false;
}

void start_next_pass(CharStream& stream, bool& first_pass) {
  if (first_pass && stream.position() == 0) {
    first_pass = false;
    return;
  }
  stream.rewind();
  first_pass = false;
}

}  // namespace

ApproxOutcome lcs_approx_multipass(TextView text, CharStream& stream,
                                   const FingerprintContext& ctx, double epsilon, double kappa,
                                   MatchMode probe_mode, SpaceMeter* meter) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
  if (!(kappa > 0.0 && kappa <= 1.0)) throw std::invalid_argument("kappa must be in (0,1]");
  if (!stream.replayable()) throw ContractViolation("multipass needs a replayable stream");

  int64_t n = text.length();
  std::vector<int64_t> ladder = approx_guess_ladder(n, epsilon);
  MeterCharge ladder_charge(meter, static_cast<int64_t>(ladder.size()));

  auto category_count = static_cast<int64_t>(std::ceil(1.0 / kappa));
  // Guess d falls in category t when n^(1-(t+1)k) < d <= n^(1-tk).
  auto category_of = [&](int64_t d) {
    double t = (1.0 - std::log(static_cast<double>(d)) / std::log(static_cast<double>(n))) / kappa;
    auto cat = static_cast<int64_t>(std::floor(t + 1e-12));
    return std::clamp<int64_t>(cat, 0, category_count - 1);
  };

  bool first_pass = true;
  size_t idx = 0;
  int64_t prev_cat = -1;
  while (idx < ladder.size()) {
    int64_t cat = std::max(category_of(ladder[idx]), prev_cat + 1);
    prev_cat = cat;

    std::vector<ApproxProbeSet> sets;
    while (idx < ladder.size() && category_of(ladder[idx]) <= cat) {
      sets.emplace_back(text, ctx, ApproxConfig{epsilon, ladder[idx]}, probe_mode, meter);
      ++idx;
    }
    if (sets.empty()) continue;

    start_next_pass(stream, first_pass);
    while (auto c = stream.next()) {
      for (auto& set : sets) set.push(*c);
    }
    int64_t best = 0;
    for (auto& set : sets) {
      if (set.fired()) best = std::max(best, set.probe_length());
    }
    if (best > 0) return {best, stream.passes_started()};
  }

  start_next_pass(stream, first_pass);
  bool common = any_common_character(text, stream, meter);
  return {common ? 1 : 0, stream.passes_started()};
}

ApproxOutcome lcs_approx_logrounds(TextView text, CharStream& stream,
                                   const FingerprintContext& ctx, double epsilon,
                                   MatchMode probe_mode, SpaceMeter* meter) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
  if (!stream.replayable()) throw ContractViolation("logrounds needs a replayable stream");

  int64_t n = text.length();
  std::vector<int64_t> ladder = approx_guess_ladder(n, epsilon);
  MeterCharge ladder_charge(meter, static_cast<int64_t>(ladder.size()));

  bool first_pass = true;
  for (int64_t d : ladder) {
    start_next_pass(stream, first_pass);
    auto found = lcs_approx_decide(text, stream, ctx, ApproxConfig{epsilon, d}, probe_mode, meter);
    if (found) return {*found, stream.passes_started()};
  }
  start_next_pass(stream, first_pass);
  bool common = any_common_character(text, stream, meter);
  return {common ? 1 : 0, stream.passes_started()};
}

}  // namespace asymstream
