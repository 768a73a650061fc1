#include "wildcard.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ntt.hpp"

namespace asymstream {

WildcardPattern WildcardPattern::from_bytes(std::span<const uint8_t> bytes,
                                            uint8_t wildcard_byte) {
  WildcardPattern p;
  p.symbols.reserve(bytes.size());
  for (uint8_t b : bytes)
    p.symbols.push_back(b == wildcard_byte ? kWildcardSymbol : static_cast<int16_t>(b));
  return p;
}

MatchBitmap naive_wildcard_bitmap(std::span<const int16_t> pattern,
                                  std::span<const uint8_t> text) {
  auto n = static_cast<int64_t>(text.size());
  auto m = static_cast<int64_t>(pattern.size());
  MatchBitmap bm;
  if (m > n) return bm;
  bm.bits.assign(static_cast<size_t>(n - m + 1), 1);
  for (int64_t j = 0; j <= n - m; ++j) {
    for (int64_t i = 0; i < m; ++i) {
      int16_t s = pattern[static_cast<size_t>(i)];
      if (s >= 0 && s != text[static_cast<size_t>(j + i)]) {
        bm.bits[static_cast<size_t>(j)] = 0;
        break;
      }
    }
  }
  return bm;
}

MatchBitmap naive_wildcard_oracle(const WildcardPattern& pattern, std::span<const uint8_t> text) {
  return naive_wildcard_bitmap(pattern.symbols, text);
}

MatchBitmap convolution_wildcard_bitmap(std::span<const int16_t> pattern,
                                        std::span<const uint8_t> text, SpaceMeter* meter,
                                        bool force_transform) {
  auto n = static_cast<int64_t>(text.size());
  auto m = static_cast<int64_t>(pattern.size());
  if (m > n) return {};
  if (m == 0) return naive_wildcard_bitmap(pattern, text);
  // Below this size the transform machinery costs more than it saves.
  if (!force_transform && (m <= 64 || n * m <= 4096))
    return naive_wildcard_bitmap(pattern, text);

  // Rank the bytes that actually occur to 1..sigma; wildcards become 0 so
  // they null out every term they appear in.
  std::array<int16_t, 256> rank;
  rank.fill(0);
  for (uint8_t b : text) rank[b] = 1;
  for (int16_t s : pattern)
    if (s >= 0) rank[static_cast<size_t>(s)] = 1;
  int16_t sigma = 0;
  for (auto& r : rank)
    if (r) r = ++sigma;

  MeterCharge values_charge(meter, 2 * (n + m));
  std::vector<uint64_t> t1(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) t1[static_cast<size_t>(i)] = rank[text[static_cast<size_t>(i)]];
  // Pattern reversed so that plain convolution yields cross-correlation.
  std::vector<uint64_t> p1(static_cast<size_t>(m));
  for (int64_t i = 0; i < m; ++i) {
    int16_t s = pattern[static_cast<size_t>(m - 1 - i)];
    p1[static_cast<size_t>(i)] = s < 0 ? 0 : static_cast<uint64_t>(rank[static_cast<size_t>(s)]);
  }

  auto cube = [](uint64_t v) { return v * v * v; };
  auto square = [](uint64_t v) { return v * v; };

  auto apply = [](std::vector<uint64_t> v, auto f) {
    for (auto& x : v) x = f(x);
    return v;
  };

  // score_j = sum_i p^3 t - 2 p^2 t^2 + p t^3; all three correlations stay far
  // below the transform modulus for byte alphabets, so residues are exact.
  std::vector<uint64_t> c3 = ntt::convolve(apply(p1, cube), t1, meter);
  std::vector<uint64_t> c2 = ntt::convolve(apply(p1, square), apply(t1, square), meter);
  std::vector<uint64_t> c1 = ntt::convolve(p1, apply(t1, cube), meter);

  MatchBitmap bm;
  bm.bits.assign(static_cast<size_t>(n - m + 1), 0);
  for (int64_t j = 0; j <= n - m; ++j) {
    auto idx = static_cast<size_t>(m - 1 + j);
    unsigned __int128 score = static_cast<unsigned __int128>(c3[idx]) + c1[idx] +
                              2 * (static_cast<unsigned __int128>(ntt::kPrime) - c2[idx]);
    bm.bits[static_cast<size_t>(j)] = score % ntt::kPrime == 0 ? 1 : 0;
  }
  return bm;
}

MatchBitmap convolution_wildcard_oracle(const WildcardPattern& pattern,
                                        std::span<const uint8_t> text, SpaceMeter* meter,
                                        bool force_transform) {
  return convolution_wildcard_bitmap(pattern.symbols, text, meter, force_transform);
}

std::vector<uint8_t> sample(std::span<const uint8_t> t, int64_t offset, int64_t k) {
  if (offset < 1 || k < 1) throw std::domain_error("sample: offset and stride must be >= 1");
  std::vector<uint8_t> out;
  auto len = static_cast<int64_t>(t.size());
  if (offset > len) return out;
  out.reserve(static_cast<size_t>((len - offset) / k + 1));
  for (int64_t i = offset; i <= len; i += k) out.push_back(t[static_cast<size_t>(i - 1)]);
  return out;
}

std::vector<int16_t> sample_symbols(std::span<const int16_t> t, int64_t offset, int64_t k) {
  if (offset < 1 || k < 1) throw std::domain_error("sample: offset and stride must be >= 1");
  std::vector<int16_t> out;
  auto len = static_cast<int64_t>(t.size());
  if (offset > len) return out;
  out.reserve(static_cast<size_t>((len - offset) / k + 1));
  for (int64_t i = offset; i <= len; i += k) out.push_back(t[static_cast<size_t>(i - 1)]);
  return out;
}

std::optional<int64_t> sampled_wildcard_match(const TextOracle& text,
                                              const WildcardPattern& pattern, int64_t space_budget,
                                              WildcardOracleKind kind, SpaceMeter* meter) {
  int64_t n = text.length();
  int64_t m = pattern.length();
  if (space_budget < 1) throw std::domain_error("space budget must be >= 1");
  if (m > n) return std::nullopt;
  if (m == 0) return 1;

  int64_t s = std::min(space_budget, n);
  int64_t k = n / s;
  if (k < 1) k = 1;

  std::vector<int16_t> sampled_pattern;
  std::vector<uint8_t> sampled_text;
  std::vector<uint8_t> survivors;

  for (int64_t offset = 1; offset <= k && offset <= n - m + 1; ++offset) {
    // Candidate alignments for this residue class: offset + i*k, i >= 0.
    int64_t candidates = (n - m + 1 - offset) / k + 1;
    survivors.assign(static_cast<size_t>(candidates), 1);
    MeterCharge survivors_charge(meter, bytes_to_words(candidates));

    bool any_alive = true;
    for (int64_t shift = 1; shift <= k && shift <= m && any_alive; ++shift) {
      sampled_pattern.clear();
      for (int64_t i = shift; i <= m; i += k)
        sampled_pattern.push_back(pattern.symbols[static_cast<size_t>(i - 1)]);

      sampled_text.clear();
      for (int64_t i = offset + shift - 1; i <= n; i += k) sampled_text.push_back(text.read(i));

      MeterCharge buffers_charge(
          meter, bytes_to_words(2 * static_cast<int64_t>(sampled_pattern.size())) +
                     bytes_to_words(static_cast<int64_t>(sampled_text.size())));

      MatchBitmap bm = kind == WildcardOracleKind::kNaive
                           ? naive_wildcard_bitmap(sampled_pattern, sampled_text)
                           : convolution_wildcard_bitmap(sampled_pattern, sampled_text, meter);
      MeterCharge bitmap_charge(meter, bytes_to_words(static_cast<int64_t>(bm.bits.size())));

      any_alive = false;
      for (int64_t i = 0; i < candidates; ++i) {
        auto ui = static_cast<size_t>(i);
        uint8_t bit = ui < bm.bits.size() ? bm.bits[ui] : 0;
        survivors[ui] &= bit;
        any_alive = any_alive || survivors[ui] != 0;
      }
    }

    for (int64_t i = 0; i < candidates; ++i) {
      if (!survivors[static_cast<size_t>(i)]) continue;
      int64_t position = offset + i * k;
      bool confirmed = true;
      for (int64_t j = 1; j <= m && confirmed; ++j) {
        int16_t sym = pattern.symbols[static_cast<size_t>(j - 1)];
        confirmed = sym < 0 || sym == text.read(position + j - 1);
      }
      if (confirmed) return position;
    }
  }
  return std::nullopt;
}

std::pair<std::vector<uint8_t>, WildcardPattern> adversarial_instance(
    int64_t kk, int64_t probe_index, const std::set<int64_t>& wild_positions) {
  if (kk < 1 || probe_index < 1 || probe_index > kk)
    throw std::domain_error("adversarial instance: need 1 <= probe index <= block size");
  for (int64_t w : wild_positions) {
    if (w < 1 || w > kk) throw std::domain_error("adversarial instance: wildcard position outside block");
  }

  std::vector<uint8_t> text;
  text.reserve(static_cast<size_t>(2 * kk + 2));
  for (int64_t j = 0; j < kk; ++j) text.push_back('1');
  text.push_back('0');
  for (int64_t j = 0; j < kk; ++j) text.push_back('1');
  text.push_back('0');

  WildcardPattern pattern;
  pattern.symbols.reserve(static_cast<size_t>(kk + probe_index + 1));
  for (int64_t j = 1; j <= kk; ++j)
    pattern.symbols.push_back(wild_positions.count(j) ? kWildcardSymbol
                                                      : static_cast<int16_t>('1'));
  for (int64_t j = 0; j < probe_index; ++j) pattern.symbols.push_back('1');
  pattern.symbols.push_back('0');
  return {std::move(text), std::move(pattern)};
}

}  // namespace asymstream
