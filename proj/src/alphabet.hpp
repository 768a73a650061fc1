#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace asymstream {

/// Bijection from the bytes present in an input onto {0, ..., sigma-1},
/// assigned in ascending byte order.
class AlphabetMap {
 public:
  AlphabetMap();

  static AlphabetMap from_bytes(std::span<const uint8_t> bytes);
  static AlphabetMap from_present(const std::array<bool, 256>& present);
  static AlphabetMap byte_identity();

  int sigma() const noexcept { return sigma_; }
  bool contains(uint8_t c) const noexcept { return rank_[c] >= 0; }

  /// Rank of c in [0, sigma); throws std::domain_error for absent bytes.
  int value(uint8_t c) const;

  /// Rank of c, or -1 when absent.
  int try_value(uint8_t c) const noexcept { return rank_[c]; }

 private:
  std::array<int16_t, 256> rank_;
  int sigma_ = 0;
};

}  // namespace asymstream
