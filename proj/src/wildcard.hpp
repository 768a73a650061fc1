#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "space_meter.hpp"
#include "text_oracle.hpp"

namespace asymstream {

/// Pattern symbol matching any single text character.
inline constexpr int16_t kWildcardSymbol = -1;

/// Pattern over the byte alphabet plus a distinguished wildcard.
struct WildcardPattern {
  std::vector<int16_t> symbols;  // byte value, or kWildcardSymbol

  static WildcardPattern from_bytes(std::span<const uint8_t> bytes, uint8_t wildcard_byte = '?');

  int64_t length() const noexcept { return static_cast<int64_t>(symbols.size()); }
  bool is_wild(int64_t i) const noexcept { return symbols[static_cast<size_t>(i)] < 0; }
};

/// bits[j] = 1 iff the pattern matches at text position start+j (0-based j).
/// Sized to the valid alignments: max(0, n - m + 1) entries.
struct MatchBitmap {
  int64_t start = 1;
  std::vector<uint8_t> bits;

  friend bool operator==(const MatchBitmap&, const MatchBitmap&) = default;
};

enum class WildcardOracleKind { kNaive, kConvolution };

/// Position-by-position check over all alignments. Constant extra space,
/// quadratic time; the reference every other oracle is held against.
MatchBitmap naive_wildcard_bitmap(std::span<const int16_t> pattern, std::span<const uint8_t> text);
MatchBitmap naive_wildcard_oracle(const WildcardPattern& pattern, std::span<const uint8_t> text);

/// Same bitmap through three exact integer cross-correlations: with wildcards
/// encoded as 0 and characters as 1..sigma, the alignment score
/// sum p*t*(p-t)^2 vanishes exactly on matches. Near-linear time, linear
/// space. Inputs small enough that the direct check is cheaper are routed to
/// it unless force_transform is set.
MatchBitmap convolution_wildcard_bitmap(std::span<const int16_t> pattern,
                                        std::span<const uint8_t> text,
                                        SpaceMeter* meter = nullptr, bool force_transform = false);
MatchBitmap convolution_wildcard_oracle(const WildcardPattern& pattern,
                                        std::span<const uint8_t> text,
                                        SpaceMeter* meter = nullptr, bool force_transform = false);

/// Characters of t at 1-based indices offset, offset+k, offset+2k, ...
std::vector<uint8_t> sample(std::span<const uint8_t> t, int64_t offset, int64_t k);
std::vector<int16_t> sample_symbols(std::span<const int16_t> t, int64_t offset, int64_t k);

/// Wildcard matching under a space budget of s words: alignments are split
/// into k = floor(n/s) residue classes, each class is decided by oracle calls
/// on stride-k samples of pattern and text conjoined positionwise, and any
/// surviving candidate is confirmed by a direct character scan before it is
/// reported. Buffers live only per oracle call, so peak registered space
/// stays O(s).
std::optional<int64_t> sampled_wildcard_match(const TextOracle& text,
                                              const WildcardPattern& pattern, int64_t space_budget,
                                              WildcardOracleKind kind,
                                              SpaceMeter* meter = nullptr);

/// Worst-case family for streamed wildcard patterns: text 1^kk 0 1^kk 0 and
/// pattern a_1..a_kk 1^i 0 where a_j is '?' exactly for j in wild_positions.
/// The pattern matches the text iff i is one of the wildcard positions.
std::pair<std::vector<uint8_t>, WildcardPattern> adversarial_instance(
    int64_t kk, int64_t probe_index, const std::set<int64_t>& wild_positions);

}  // namespace asymstream
